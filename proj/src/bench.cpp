#include "relcomp/bench.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "relcomp/errors.hpp"

namespace relcomp {

FieldElement sample_field(SplitMix64& rng, const Field& F) {
    u64 p = F.p();
    u64 lim = (UINT64_MAX / p) * p;  // multiple of p
    u64 x = rng.next();
    while (x >= lim) x = rng.next();
    return F.from_u64(x % p);
}

Poly random_poly(SplitMix64& rng, const Field& F, std::size_t len) {
    std::vector<FieldElement> c(len, F.zero());
    for (std::size_t i = 0; i < len; ++i) c[i] = sample_field(rng, F);
    return Poly(F, std::move(c));
}

Poly random_monic(SplitMix64& rng, const Field& F, std::size_t deg) {
    std::vector<FieldElement> c(deg + 1, F.zero());
    for (std::size_t i = 0; i < deg; ++i) c[i] = sample_field(rng, F);
    c[deg] = F.one();
    return Poly(F, std::move(c));
}

BiPoly random_bipoly(SplitMix64& rng, const Field& F, std::size_t xb, std::size_t yb) {
    BiPoly G(F, std::max<std::size_t>(xb, 1), std::max<std::size_t>(yb, 1));
    for (std::size_t i = 0; i < xb; ++i)
        for (std::size_t j = 0; j < yb; ++j) G.at(i, j) = sample_field(rng, F);
    return G;
}

Instance make_instance(u64 p, std::size_t n, u64 seed) {
    if (n == 0) throw BadParameters("make_instance: degree must be positive");
    Field F(p);
    SplitMix64 rng(seed);
    Instance ins;
    ins.p = p;
    ins.seed = seed;
    ins.n = n;
    ins.f = random_monic(rng, F, n);
    ins.a = random_poly(rng, F, n);
    ins.g = random_poly(rng, F, n);
    return ins;
}

PointSet make_point_set(u64 p, std::size_t n, u64 seed) {
    Field F(p);
    if (n > p) throw BadParameters("make_point_set: more points than field elements");
    SplitMix64 rng(seed);
    PointSet ps;
    std::unordered_set<u64> seen;
    while (ps.xs.size() < n) {
        FieldElement x = sample_field(rng, F);
        if (seen.insert(x.v).second) ps.xs.push_back(x);
    }
    for (std::size_t i = 0; i < n; ++i) ps.ys.push_back(sample_field(rng, F));
    return ps;
}

namespace {

std::string fnv_hex(const std::vector<FieldElement>& v) {
    u64 h = 14695981039346656037ULL;
    auto eat = [&](u64 x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    eat(static_cast<u64>(v.size()));
    for (FieldElement e : v) eat(e.v);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace

std::string digest_hex(const Poly& p) { return fnv_hex(p.coeffs()); }
std::string digest_hex(const std::vector<FieldElement>& v) { return fnv_hex(v); }

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "algo,n,m,d,mu,delta,phase,millis,verified,generic\n";
    for (const ReportRow& r : rows) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.millis);
        os << r.algo << ',' << r.n << ',' << r.m << ',' << r.d << ',' << r.mu << ',' << r.delta
           << ',' << r.phase << ',' << ms << ',' << (r.verified ? "true" : "false") << ','
           << (r.generic ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string report_json(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& r = rows[i];
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.millis);
        os << "  {\"algo\": \"" << r.algo << "\", \"n\": " << r.n << ", \"m\": " << r.m
           << ", \"d\": " << r.d << ", \"mu\": " << r.mu << ", \"delta\": " << r.delta
           << ", \"phase\": \"" << r.phase << "\", \"millis\": " << ms
           << ", \"verified\": " << (r.verified ? "true" : "false")
           << ", \"generic\": " << (r.generic ? "true" : "false") << "}"
           << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

namespace {

u64 parse_u64(const std::string& s, const std::string& key) {
    if (s.empty()) throw BadParameters("instance file: empty value for " + key);
    u64 v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw BadParameters("instance file: non-decimal value for " + key);
        u64 nv = v * 10 + static_cast<u64>(c - '0');
        if (nv / 10 != v) throw BadParameters("instance file: value overflow for " + key);
        v = nv;
    }
    return v;
}

// Lists accept commas, whitespace, or both as separators.
std::vector<u64> parse_list(const std::string& s, const std::string& key) {
    std::vector<u64> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                out.push_back(parse_u64(cur, key));
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_u64(cur, key));
    if (out.empty()) throw BadParameters("instance file: empty value for " + key);
    return out;
}

}  // namespace

InstanceFile parse_instance_text(const std::string& text) {
    InstanceFile out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t");
        line = line.substr(a, b - a + 1);
        if (line.empty() || line[0] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw BadParameters("instance file: line without '='");
        auto trim = [](std::string s) {
            std::size_t lo = s.find_first_not_of(" \t");
            if (lo == std::string::npos) return std::string();
            std::size_t hi = s.find_last_not_of(" \t");
            return s.substr(lo, hi - lo + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "p") {
            out.p = parse_u64(val, key);
            out.has_p = true;
        } else if (key == "seed") {
            out.seed = parse_u64(val, key);
            out.has_seed = true;
        } else if (key == "n") {
            out.n = parse_u64(val, key);
            out.has_n = true;
        } else if (key == "m") {
            out.m = parse_u64(val, key);
            out.has_m = true;
        } else if (key == "d") {
            out.d = parse_u64(val, key);
            out.has_d = true;
        } else if (key == "mu") {
            out.mu = parse_u64(val, key);
            out.has_mu = true;
        } else if (key == "f") {
            out.f = parse_list(val, key);
        } else if (key == "a") {
            out.a = parse_list(val, key);
        } else if (key == "g") {
            out.g = parse_list(val, key);
        } else if (key == "xs") {
            out.xs = parse_list(val, key);
        } else if (key == "ys") {
            out.ys = parse_list(val, key);
        } else if (key == "G") {
            out.G.push_back(parse_list(val, key));
        } else {
            throw BadParameters("instance file: unknown key '" + key + "'");
        }
    }
    return out;
}

}  // namespace relcomp
