#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "relcomp/bench.hpp"
#include "relcomp/compose.hpp"
#include "relcomp/duality.hpp"
#include "relcomp/relations.hpp"

namespace rc = relcomp;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("RELCOMP_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
#endif
}

rc::Poly poly_from_u64(const rc::Field& F, const std::vector<rc::u64>& raw) {
    std::vector<rc::FieldElement> c(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) c[i] = F.from_u64(raw[i]);
    return rc::Poly(F, std::move(c));
}

rc::InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rc::BadParameters("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return rc::parse_instance_text(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw rc::BadParameters("cannot write file: " + path);
    out << text;
}

void small_prime_warning(rc::u64 p, std::size_t n) {
    unsigned __int128 bound = static_cast<unsigned __int128>(4) * n * n;
    if (static_cast<unsigned __int128>(p) < bound)
        std::cerr << "warning: prime " << p << " is small for degree " << n
                  << " (p < 4n^2); certification may refuse more often\n";
}

void emit_reports(const std::vector<rc::ReportRow>& rows, const std::string& csv,
                  const std::string& json) {
    if (!csv.empty()) write_file(csv, rc::report_csv(rows));
    if (!json.empty()) write_file(json, rc::report_json(rows));
}

struct ComposeArgs {
    rc::u64 p = 998244353ULL;
    std::size_t n = 64;
    rc::u64 seed = 1;
    std::string algo = "relmat";
    std::string instance, csv, json;
    bool no_verify = false;
};

int run_compose(const ComposeArgs& args) {
    rc::u64 p = args.p;
    std::size_t n = args.n;
    rc::u64 seed = args.seed;
    rc::Poly f, a, g;
    if (!args.instance.empty()) {
        rc::InstanceFile insf = read_instance_file(args.instance);
        if (!insf.has_p) throw rc::BadParameters("instance file must set p");
        p = insf.p;
        rc::Field F(p);
        if (insf.f.empty() || insf.a.empty() || insf.g.empty())
            throw rc::BadParameters("instance file must set f, a and g for compose");
        f = poly_from_u64(F, insf.f);
        a = poly_from_u64(F, insf.a);
        g = poly_from_u64(F, insf.g);
        n = f.is_zero() ? 0 : f.deg();
        if (insf.has_seed) seed = insf.seed;
    } else {
        rc::Instance ins = rc::make_instance(p, n, seed);
        f = ins.f;
        a = ins.a;
        g = ins.g;
    }
    if (f.is_zero() || f.deg() == 0) throw rc::BadParameters("compose: deg f >= 1 required");
    small_prime_warning(p, n);

    rc::PhaseTimings pt;
    bool generic = true;
    auto t0 = Clock::now();
    rc::Poly h;
    if (args.algo == "horner") {
        h = rc::horner_compose(g, a, f);
    } else if (args.algo == "brent-kung") {
        h = rc::brent_kung_compose(g, a, f);
    } else if (args.algo == "relmat") {
        auto res = rc::univariate_compose(g, a, f, &pt);
        if (res.ok()) {
            h = res.value();
        } else {
            generic = false;
            std::cerr << "warning: non-generic input (" << res.refusal().reason
                      << "); falling back to brent-kung\n";
            h = rc::brent_kung_compose(g, a, f);
        }
    } else if (args.algo == "charpoly") {
        try {
            h = rc::compose_via_charpoly(g, a, f);
        } catch (const rc::MinimalPolynomialDefect& e) {
            generic = false;
            std::cerr << "warning: " << e.what() << "; falling back to brent-kung\n";
            h = rc::brent_kung_compose(g, a, f);
        }
    } else {
        throw rc::BadParameters("unknown --algo (horner|brent-kung|relmat|charpoly)");
    }
    double total = ms_since(t0);

    bool verified = false;
    if (!args.no_verify) {
        rc::Poly oracle = rc::horner_compose(g, a, f);
        verified = (oracle == h);
        if (!verified) {
            std::cerr << "error: verification mismatch against the Horner oracle\n";
            return 3;
        }
    }

    std::vector<rc::ReportRow> rows;
    rc::ReportRow tot{args.algo, n, pt.m, pt.d, pt.mu, pt.delta, "total", total, verified, generic};
    rows.push_back(tot);
    for (const auto& ph : pt.phases)
        rows.push_back({args.algo, n, pt.m, pt.d, pt.mu, pt.delta, ph.first, ph.second, verified,
                        generic});
    emit_reports(rows, args.csv, args.json);

    std::cout << "algo=" << args.algo << " p=" << p << " n=" << n << " seed=" << seed
              << " millis=" << total << " verified=" << (verified ? "true" : "false")
              << " generic=" << (generic ? "true" : "false") << " digest=" << rc::digest_hex(h)
              << "\n";
    for (const auto& ph : pt.phases)
        std::cout << "  phase " << ph.first << ": " << ph.second << " ms\n";
    return 0;
}

struct BivArgs {
    rc::u64 p = 998244353ULL;
    std::size_t n = 64, m = 0, d = 0;
    rc::u64 seed = 1;
    std::string algo = "nz";
    std::string instance, csv, json;
    bool no_verify = false;
};

int run_bivcompose(const BivArgs& args) {
    rc::u64 p = args.p;
    std::size_t n = args.n;
    rc::Poly f, a;
    rc::BiPoly G;
    if (!args.instance.empty()) {
        rc::InstanceFile insf = read_instance_file(args.instance);
        if (!insf.has_p) throw rc::BadParameters("instance file must set p");
        p = insf.p;
        rc::Field F(p);
        if (insf.f.empty() || insf.a.empty() || insf.G.empty())
            throw rc::BadParameters("instance file must set f, a and G for bivcompose");
        f = poly_from_u64(F, insf.f);
        a = poly_from_u64(F, insf.a);
        std::size_t xb = 1;
        for (const auto& row : insf.G) xb = std::max(xb, row.size());
        G = rc::BiPoly(F, xb, insf.G.size());
        for (std::size_t j = 0; j < insf.G.size(); ++j)
            for (std::size_t i = 0; i < insf.G[j].size(); ++i) G.at(i, j) = F.from_u64(insf.G[j][i]);
        n = f.deg();
    } else {
        rc::Field F(p);
        rc::SplitMix64 rng(args.seed);
        f = rc::random_monic(rng, F, n);
        std::size_t xb = args.m ? args.m : n;
        std::size_t yb = args.d ? args.d : n;
        G = rc::random_bipoly(rng, F, xb, yb);
        a = rc::random_poly(rng, F, n);
    }
    if (f.is_zero() || f.deg() == 0) throw rc::BadParameters("bivcompose: deg f >= 1 required");
    small_prime_warning(p, n);

    bool generic = true;
    auto t0 = Clock::now();
    rc::Poly h;
    std::size_t mu = 0, delta = 0;
    if (args.algo == "nz") {
        h = rc::nz_bivariate_compose(G, a, f);
    } else if (args.algo == "kronecker") {
        std::size_t d = G.y_support();
        mu = 1;
        while (mu * mu * mu < d) ++mu;
        if (mu < 2) mu = 2;
        if (mu > n) {
            std::cerr << "warning: y-degree too large for the block size; using nz path\n";
            h = rc::nz_bivariate_compose(G, a, f);
            generic = false;
        } else {
            rc::PowerTables tb = rc::powers_AB(f, a, mu);
            delta = tb.delta;
            if (!tb.basis.generic) {
                generic = false;
                std::cerr << "warning: non-generic relation basis; falling back to nz path\n";
                h = rc::nz_bivariate_compose(G, a, f);
            } else {
                h = rc::bivariate_compose(G, a, f, tb);
            }
        }
    } else {
        throw rc::BadParameters("unknown --algo (nz|kronecker)");
    }
    double total = ms_since(t0);

    bool verified = false;
    if (!args.no_verify) {
        rc::Poly oracle = rc::eval_y(G, a, f);
        verified = (oracle == h);
        if (!verified) {
            std::cerr << "error: verification mismatch against the y-Horner oracle\n";
            return 3;
        }
    }

    std::vector<rc::ReportRow> rows{{args.algo, n, G.x_support(), G.y_support(), mu, delta,
                                     "total", total, verified, generic}};
    emit_reports(rows, args.csv, args.json);
    std::cout << "algo=" << args.algo << " p=" << p << " n=" << n << " millis=" << total
              << " verified=" << (verified ? "true" : "false")
              << " generic=" << (generic ? "true" : "false") << " digest=" << rc::digest_hex(h)
              << "\n";
    return 0;
}

struct MpeArgs {
    rc::u64 p = 998244353ULL;
    std::size_t n = 32;
    rc::u64 seed = 1;
    std::string instance, csv, json;
    bool no_verify = false;
};

int run_mpe(const MpeArgs& args) {
    rc::u64 p = args.p;
    rc::BiPoly G;
    std::vector<rc::FieldElement> xs, ys;
    if (!args.instance.empty()) {
        rc::InstanceFile insf = read_instance_file(args.instance);
        if (!insf.has_p) throw rc::BadParameters("instance file must set p");
        p = insf.p;
        rc::Field F(p);
        if (insf.G.empty() || insf.xs.empty() || insf.ys.empty())
            throw rc::BadParameters("instance file must set G, xs and ys for mpe");
        std::size_t xb = 1;
        for (const auto& row : insf.G) xb = std::max(xb, row.size());
        G = rc::BiPoly(F, xb, insf.G.size());
        for (std::size_t j = 0; j < insf.G.size(); ++j)
            for (std::size_t i = 0; i < insf.G[j].size(); ++i) G.at(i, j) = F.from_u64(insf.G[j][i]);
        for (rc::u64 v : insf.xs) xs.push_back(F.from_u64(v));
        for (rc::u64 v : insf.ys) ys.push_back(F.from_u64(v));
    } else {
        rc::Field F(p);
        rc::PointSet ps = rc::make_point_set(p, args.n, args.seed);
        xs = ps.xs;
        ys = ps.ys;
        rc::SplitMix64 rng(args.seed ^ 0x5bd1e995ULL);
        G = rc::random_bipoly(rng, F, args.n, args.n);
    }
    rc::Field F(p);

    bool generic = true;
    auto t0 = Clock::now();
    std::vector<rc::FieldElement> vals;
    auto res = rc::multipoint_eval_bivariate(G, xs, ys);
    if (res.ok()) {
        vals = res.value();
    } else {
        generic = false;
        std::cerr << "warning: non-generic input (" << res.refusal().reason
                  << "); falling back to per-point evaluation\n";
        vals.resize(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) vals[i] = rc::eval_xy(G, xs[i], ys[i]);
    }
    double total = ms_since(t0);

    bool verified = false;
    if (!args.no_verify) {
        verified = true;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (!(vals[i] == rc::eval_xy(G, xs[i], ys[i]))) {
                verified = false;
                break;
            }
        if (!verified) {
            std::cerr << "error: verification mismatch against per-point evaluation\n";
            return 3;
        }
    }

    std::vector<rc::ReportRow> rows{{"mpe", xs.size(), G.x_support(), G.y_support(), 0, 0, "total",
                                     total, verified, generic}};
    emit_reports(rows, args.csv, args.json);
    std::cout << "algo=mpe p=" << p << " points=" << xs.size() << " millis=" << total
              << " verified=" << (verified ? "true" : "false")
              << " generic=" << (generic ? "true" : "false") << " digest=" << rc::digest_hex(vals)
              << "\n";
    return 0;
}

struct BasisArgs {
    rc::u64 p = 998244353ULL;
    std::size_t n = 16, mu = 2;
    rc::u64 seed = 1;
    std::string module = "N";
    std::string instance;
};

int run_basis(const BasisArgs& args) {
    rc::u64 p = args.p;
    rc::Poly f, a;
    if (!args.instance.empty()) {
        rc::InstanceFile insf = read_instance_file(args.instance);
        if (!insf.has_p) throw rc::BadParameters("instance file must set p");
        p = insf.p;
        rc::Field F(p);
        if (insf.f.empty() || insf.a.empty())
            throw rc::BadParameters("instance file must set f and a for basis");
        f = poly_from_u64(F, insf.f);
        a = poly_from_u64(F, insf.a);
    } else {
        rc::Field F(p);
        rc::SplitMix64 rng(args.seed);
        f = rc::random_monic(rng, F, args.n);
        a = rc::random_poly(rng, F, args.n);
    }
    std::size_t n = f.deg();

    if (args.module == "N") {
        rc::RelationBasis rb = rc::nmu_basis(f, a, args.mu);
        std::cout << "module=N mu=" << rb.mu << " n=" << rb.n << " delta=" << rb.delta
                  << " generic=" << (rb.generic ? "true" : "false") << " certified=true\n";
        std::cout << "column degrees:";
        for (std::size_t c : rb.cdeg) std::cout << ' ' << c;
        std::cout << "\n";
        for (std::size_t i = 0; i < rb.mat.rows; ++i) {
            for (std::size_t j = 0; j < rb.mat.cols; ++j)
                std::cout << (j ? " | " : "") << rb.mat.at(i, j).to_string("x");
            std::cout << "\n";
        }
    } else if (args.module == "M") {
        std::size_t dceil = (n + args.mu - 1) / args.mu;
        rc::TruncatedPowerTable table = rc::truncated_table_direct(f, a, args.mu, 2 * dceil);
        auto mb = rc::mm_basis(f, a, args.mu, table);
        if (!mb.ok()) {
            std::cout << "module=M mu=" << args.mu << " refused: " << mb.refusal().reason << "\n";
            return 0;
        }
        const rc::RelationBasis& rb = mb.value();
        std::cout << "module=M mu=" << rb.mu << " n=" << rb.n << " delta=" << rb.delta
                  << " generic=" << (rb.generic ? "true" : "false") << " certified=true\n";
        std::cout << "column degrees:";
        for (std::size_t c : rb.cdeg) std::cout << ' ' << c;
        std::cout << "\n";
        for (std::size_t i = 0; i < rb.mat.rows; ++i) {
            for (std::size_t j = 0; j < rb.mat.cols; ++j)
                std::cout << (j ? " | " : "") << rb.mat.at(i, j).to_string("y");
            std::cout << "\n";
        }
    } else {
        throw rc::BadParameters("unknown --module (N|M)");
    }
    return 0;
}

struct CheckArgs {
    rc::u64 p = 998244353ULL;
    std::string sizes = "8,16,32";
    rc::u64 seed = 1;
    std::size_t count = 3;
};

int run_check(const CheckArgs& args) {
    std::vector<std::size_t> sizes;
    for (const auto& tok : [&] {
             std::vector<std::string> out;
             std::string cur;
             for (char c : args.sizes) {
                 if (c == ',') {
                     out.push_back(cur);
                     cur.clear();
                 } else
                     cur += c;
             }
             out.push_back(cur);
             return out;
         }())
        sizes.push_back(static_cast<std::size_t>(std::strtoull(tok.c_str(), nullptr, 10)));

    bool all_ok = true;
    for (std::size_t n : sizes) {
        for (std::size_t rep = 0; rep < args.count; ++rep) {
            rc::u64 seed = args.seed + 1000 * rep + n;
            rc::Instance ins = rc::make_instance(args.p, n, seed);
            rc::Poly oracle = rc::horner_compose(ins.g, ins.a, ins.f);
            auto res = rc::univariate_compose(ins.g, ins.a, ins.f);
            bool ok1 = res.ok() ? (res.value() == oracle) : true;
            bool gen = res.ok();

            rc::SplitMix64 rng(seed ^ 0x9e3779b9ULL);
            rc::Field F(args.p);
            rc::BiPoly G = rc::random_bipoly(rng, F, std::min<std::size_t>(n, 8), n);
            bool ok2 = rc::nz_bivariate_compose(G, ins.a, ins.f) == rc::eval_y(G, ins.a, ins.f);

            std::size_t m = std::max<std::size_t>(1, n / 4);
            auto rep2 = rc::check_transposition_identity(ins.f, ins.a, m, 4);
            bool ok3 = rep2.krylov_identity && rep2.symmetrizer_identity;

            bool ok = ok1 && ok2 && ok3;
            all_ok = all_ok && ok;
            std::cout << "check n=" << n << " seed=" << seed << " compose="
                      << (ok1 ? "pass" : "FAIL") << (gen ? "" : " (non-generic, skipped)")
                      << " bivariate=" << (ok2 ? "pass" : "FAIL")
                      << " transposition=" << (ok3 ? "pass" : "FAIL") << "\n";
        }
    }
    if (!all_ok) {
        std::cerr << "error: property check failed\n";
        return 3;
    }
    return 0;
}

struct BenchArgs {
    rc::u64 p = 998244353ULL;
    std::string sizes = "1024,4096";
    std::string algos = "horner,brent-kung,relmat";
    rc::u64 seed = 1;
    std::string csv, json;
    bool no_verify = false;
};

int run_bench(const BenchArgs& args) {
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                out.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
        out.push_back(cur);
        return out;
    };
    std::vector<std::size_t> sizes;
    for (const auto& t : split(args.sizes))
        sizes.push_back(static_cast<std::size_t>(std::strtoull(t.c_str(), nullptr, 10)));
    std::vector<std::string> algos = split(args.algos);

    std::vector<rc::ReportRow> rows;
    for (std::size_t n : sizes) {
        rc::Instance ins = rc::make_instance(args.p, n, args.seed);
        small_prime_warning(args.p, n);
        rc::Poly oracle;
        bool have_oracle = false;
        if (!args.no_verify) {
            // horner is quadratic-with-large-constant at big n; above 4096 the
            // verification oracle is the baby-step/giant-step baseline, which
            // the test suite pins against horner at small sizes
            oracle = (n <= 4096) ? rc::horner_compose(ins.g, ins.a, ins.f)
                                 : rc::brent_kung_compose(ins.g, ins.a, ins.f);
            have_oracle = true;
        }
        for (const std::string& algo : algos) {
            rc::PhaseTimings pt;
            bool generic = true;
            auto t0 = Clock::now();
            rc::Poly h;
            if (algo == "horner") {
                h = rc::horner_compose(ins.g, ins.a, ins.f);
            } else if (algo == "brent-kung") {
                h = rc::brent_kung_compose(ins.g, ins.a, ins.f);
            } else if (algo == "relmat") {
                auto res = rc::univariate_compose(ins.g, ins.a, ins.f, &pt);
                if (res.ok()) {
                    h = res.value();
                } else {
                    generic = false;
                    std::cerr << "warning: n=" << n << " non-generic (" << res.refusal().reason
                              << "); falling back to brent-kung\n";
                    h = rc::brent_kung_compose(ins.g, ins.a, ins.f);
                }
            } else {
                throw rc::BadParameters("unknown bench algo: " + algo);
            }
            double total = ms_since(t0);
            bool verified = false;
            if (have_oracle) {
                verified = (h == oracle);
                if (!verified) {
                    std::cerr << "error: verification mismatch at n=" << n << " algo=" << algo
                              << "; aborting sweep\n";
                    return 3;
                }
            }
            rows.push_back({algo, n, pt.m, pt.d, pt.mu, pt.delta, "total", total, verified,
                            generic});
            for (const auto& ph : pt.phases)
                rows.push_back({algo, n, pt.m, pt.d, pt.mu, pt.delta, ph.first, ph.second,
                                verified, generic});
            std::cout << "bench n=" << n << " algo=" << algo << " millis=" << total
                      << " verified=" << (verified ? "true" : "false") << "\n";
        }
    }
    emit_reports(rows, args.csv, args.json);
    if (args.csv.empty() && args.json.empty()) std::cout << rc::report_csv(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"modular composition workbench: relation-matrix composition with oracles"};
    app.require_subcommand(1);

    ComposeArgs ca;
    CLI::App* compose = app.add_subcommand("compose", "univariate composition g(a) mod f");
    compose->add_option("--p", ca.p, "prime modulus");
    compose->add_option("--n", ca.n, "degree of f");
    compose->add_option("--seed", ca.seed, "instance seed");
    compose->add_option("--algo", ca.algo, "horner|brent-kung|relmat|charpoly");
    compose->add_option("--instance", ca.instance, "instance file (overrides p/n/seed)");
    compose->add_option("--csv", ca.csv, "write report rows as CSV");
    compose->add_option("--json", ca.json, "write report rows as JSON");
    compose->add_flag("--no-verify", ca.no_verify, "skip the mandatory oracle verification");

    BivArgs ba;
    CLI::App* biv = app.add_subcommand("bivcompose", "bivariate composition G(x, a) mod f");
    biv->add_option("--p", ba.p, "prime modulus");
    biv->add_option("--n", ba.n, "degree of f");
    biv->add_option("--m", ba.m, "x-bound of G (default n)");
    biv->add_option("--d", ba.d, "y-bound of G (default n)");
    biv->add_option("--seed", ba.seed, "instance seed");
    biv->add_option("--algo", ba.algo, "nz|kronecker");
    biv->add_option("--instance", ba.instance, "instance file");
    biv->add_option("--csv", ba.csv, "write report rows as CSV");
    biv->add_option("--json", ba.json, "write report rows as JSON");
    biv->add_flag("--no-verify", ba.no_verify, "skip the mandatory oracle verification");

    MpeArgs ma;
    CLI::App* mpe = app.add_subcommand("mpe", "multipoint evaluation of a bivariate");
    mpe->add_option("--p", ma.p, "prime modulus");
    mpe->add_option("--n", ma.n, "number of points");
    mpe->add_option("--seed", ma.seed, "instance seed");
    mpe->add_option("--instance", ma.instance, "instance file");
    mpe->add_option("--csv", ma.csv, "write report rows as CSV");
    mpe->add_option("--json", ma.json, "write report rows as JSON");
    mpe->add_flag("--no-verify", ma.no_verify, "skip the mandatory oracle verification");

    BasisArgs bas;
    CLI::App* basis = app.add_subcommand("basis", "print a relation basis with certification");
    basis->add_option("--module", bas.module, "N|M");
    basis->add_option("--p", bas.p, "prime modulus");
    basis->add_option("--n", bas.n, "degree of f");
    basis->add_option("--mu", bas.mu, "block size");
    basis->add_option("--seed", bas.seed, "instance seed");
    basis->add_option("--instance", bas.instance, "instance file");

    CheckArgs ch;
    CLI::App* check = app.add_subcommand("check", "run the quick property suite");
    check->add_option("--p", ch.p, "prime modulus");
    check->add_option("--sizes", ch.sizes, "comma-separated degrees");
    check->add_option("--seed", ch.seed, "base seed");
    check->add_option("--count", ch.count, "instances per size");

    BenchArgs be;
    CLI::App* bench = app.add_subcommand("bench", "size sweep with CSV/JSON report");
    bench->add_option("--p", be.p, "prime modulus");
    bench->add_option("--sizes", be.sizes, "comma-separated degrees");
    bench->add_option("--algo", be.algos, "comma-separated algorithms");
    bench->add_option("--seed", be.seed, "instance seed");
    bench->add_option("--csv", be.csv, "write CSV report");
    bench->add_option("--json", be.json, "write JSON report");
    bench->add_flag("--no-verify", be.no_verify, "skip the mandatory oracle verification");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compose->parsed()) return run_compose(ca);
        if (biv->parsed()) return run_bivcompose(ba);
        if (mpe->parsed()) return run_mpe(ma);
        if (basis->parsed()) return run_basis(bas);
        if (check->parsed()) return run_check(ch);
        if (bench->parsed()) return run_bench(be);
    } catch (const rc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
