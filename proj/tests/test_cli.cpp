#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "relcomp/bench.hpp"

using namespace relcomp;

TEST_CASE("instance text parsing") {
    std::string text =
        "# comment line\n"
        "p=998244353\n"
        "seed=7\n"
        "n=4\n"
        "\n"
        "f=1,0,0,0,1\n"
        "a=3,1\n"
        "g=0,2\n"
        "xs=1,2,3\n"
        "ys=4,5,6\n"
        "G=1,2,3\n"
        "G=4,5\n";
    InstanceFile insf = parse_instance_text(text);
    CHECK(insf.has_p);
    CHECK(insf.p == 998244353ULL);
    CHECK(insf.has_seed);
    CHECK(insf.seed == 7);
    CHECK(insf.has_n);
    CHECK(insf.n == 4);
    CHECK(insf.f == std::vector<u64>{1, 0, 0, 0, 1});
    CHECK(insf.a == std::vector<u64>{3, 1});
    CHECK(insf.g == std::vector<u64>{0, 2});
    CHECK(insf.xs == std::vector<u64>{1, 2, 3});
    CHECK(insf.ys == std::vector<u64>{4, 5, 6});
    REQUIRE(insf.G.size() == 2);
    CHECK(insf.G[0] == std::vector<u64>{1, 2, 3});
    CHECK(insf.G[1] == std::vector<u64>{4, 5});

    CHECK_THROWS_AS(parse_instance_text("q=5\n"), BadParameters);
    CHECK_THROWS_AS(parse_instance_text("p=998244353\nfoo=1,2\n"), BadParameters);
    // spaces around keys and values are tolerated
    InstanceFile ws = parse_instance_text("  p = 17 \n a = 1, 2 \n");
    CHECK(ws.p == 17);
    CHECK(ws.a == std::vector<u64>{1, 2});
    // lists split on whitespace as well as commas
    InstanceFile sp = parse_instance_text("p=17\nf = 13 0 11 6 1\ng = 3,3 8,4\n");
    CHECK(sp.f == std::vector<u64>{13, 0, 11, 6, 1});
    CHECK(sp.g == std::vector<u64>{3, 3, 8, 4});
    CHECK_THROWS_AS(parse_instance_text("p=17\nf = , \n"), BadParameters);
}

TEST_CASE("report formats have the fixed schema") {
    std::vector<ReportRow> rows;
    rows.push_back({"relmat", 64, 3, 22, 3, 22, "total", 1.5, true, true});
    rows.push_back({"horner", 64, 0, 0, 0, 0, "total", 2.25, true, false});
    std::string csv = report_csv(rows);
    CHECK(csv.find("algo,n,m,d,mu,delta,phase,millis,verified,generic\n") == 0);
    CHECK(csv.find("relmat,64,3,22,3,22,total,1.500,true,true\n") != std::string::npos);
    CHECK(csv.find("horner,64,0,0,0,0,total,2.250,true,false\n") != std::string::npos);

    std::string js = report_json(rows);
    CHECK(js.find("\"algo\": \"relmat\"") != std::string::npos);
    CHECK(js.find("\"n\": 64") != std::string::npos);
    CHECK(js.find("\"verified\": true") != std::string::npos);
    CHECK(js.find("\"generic\": false") != std::string::npos);
    CHECK(js.find('[') != std::string::npos);
    CHECK(js.find(']') != std::string::npos);
}

TEST_CASE("instances and digests are deterministic in the seed") {
    Instance a = make_instance(998244353ULL, 32, 5);
    Instance b = make_instance(998244353ULL, 32, 5);
    CHECK(a.f == b.f);
    CHECK(a.a == b.a);
    CHECK(a.g == b.g);
    CHECK(digest_hex(a.f) == digest_hex(b.f));
    CHECK(digest_hex(a.f).size() == 16);
    Instance c = make_instance(998244353ULL, 32, 6);
    CHECK(digest_hex(c.f) != digest_hex(a.f));
    CHECK(a.f.deg() == 32);
    CHECK(a.f.lead().v == 1);

    PointSet p1 = make_point_set(998244353ULL, 50, 9);
    PointSet p2 = make_point_set(998244353ULL, 50, 9);
    CHECK(p1.xs == p2.xs);
    CHECK(p1.ys == p2.ys);
    for (std::size_t i = 0; i < p1.xs.size(); ++i)
        for (std::size_t j = i + 1; j < p1.xs.size(); ++j) CHECK(p1.xs[i] != p1.xs[j]);
}

TEST_CASE("small-field point sets reject impossible requests") {
    CHECK_THROWS_AS(make_point_set(5, 10, 1), BadParameters);
    PointSet ps = make_point_set(5, 5, 1);
    CHECK(ps.xs.size() == 5);
}
