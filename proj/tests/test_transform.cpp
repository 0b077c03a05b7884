#include "doctest.h"
#include "xyz/transform.hpp"

using namespace xyz;

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

// edges inside the V part / E part / between, for part-size checks
struct PartCounts {
    long long vv = 0, ee = 0, ve = 0;
};

PartCounts count_parts(const Graph& t, int n) {
    PartCounts c;
    for (const auto& [u, v] : t.edges()) {
        if (u < n && v < n)
            ++c.vv;
        else if (u >= n && v >= n)
            ++c.ee;
        else
            ++c.ve;
    }
    return c;
}

}  // namespace

TEST_CASE("code parsing and printing") {
    CHECK(XyzCode::parse("+0+").str() == "+0+");
    CHECK(XyzCode::parse("--1").str() == "--1");
    CHECK_THROWS_AS(XyzCode::parse("++"), code_parse_error);
    CHECK_THROWS_AS(XyzCode::parse("ab+"), code_parse_error);
    CHECK_THROWS_AS(XyzCode::parse("+0+2"), code_parse_error);
}

TEST_CASE("bar complement pairing") {
    CHECK(XyzCode::parse("+0+").bar_complement().str() == "-1-");
    CHECK(XyzCode::parse("111").bar_complement().str() == "000");
    for (const XyzCode& code : all_codes())
        CHECK(code.bar_complement().bar_complement() == code);
}

TEST_CASE("all_codes enumerates 64 distinct codes") {
    const auto& codes = all_codes();
    REQUIRE(codes.size() == 64);
    for (size_t i = 0; i < codes.size(); ++i)
        for (size_t j = i + 1; j < codes.size(); ++j) CHECK(!(codes[i] == codes[j]));
    CHECK(codes.front().str() == "000");
    CHECK(codes.back().str() == "---");
}

TEST_CASE("bipartite incidence graph") {
    RegularGraph c3 = as_regular(cycle(3));
    Graph b = bipartite_incidence_graph(c3, false);
    CHECK(b.n() == 6);
    CHECK(b.m() == 6);
    CHECK(is_isomorphic(b, cycle(6)));

    Graph bc = bipartite_incidence_graph(c3, true);
    CHECK(bc.m() == 3);  // m(n-2)

    RegularGraph c4 = as_regular(cycle(4));
    CHECK(is_isomorphic(bipartite_incidence_graph(c4, false), bipartite_incidence_graph(c4, true)));

    // B(G) is the z-part of G^{00+}, B^c(G) of G^{00-}
    CHECK(bipartite_incidence_graph(c4, false) == xyz_transform(c4, XyzCode::parse("00+")));
    CHECK(bipartite_incidence_graph(c4, true) == xyz_transform(c4, XyzCode::parse("00-")));
}

TEST_CASE("transformation examples") {
    RegularGraph c3 = as_regular(cycle(3));
    CHECK(is_isomorphic(xyz_transform(c3, XyzCode::parse("00+")), cycle(6)));

    RegularGraph c4 = as_regular(cycle(4));
    Graph total = xyz_transform(c4, XyzCode::parse("+++"));
    CHECK(total.n() == 8);
    CHECK(total.m() == 16);
    for (int v = 0; v < 8; ++v) CHECK(total.degree(v) == 4);

    // z = 0 keeps the two parts disconnected
    Graph disc = xyz_transform(c4, XyzCode::parse("++0"));
    PartCounts c = count_parts(disc, 4);
    CHECK(c.ve == 0);
    CHECK(c.vv == 4);
    CHECK(c.ee == 4);
}

TEST_CASE("vertex labels of a transformation") {
    RegularGraph c3 = as_regular(cycle(3));
    Graph t = xyz_transform(c3, XyzCode::parse("111"));
    REQUIRE(t.n() == 6);
    CHECK(t.labels()[0] == VertexLabel::base_vertex(0));
    CHECK(t.labels()[2] == VertexLabel::base_vertex(2));
    CHECK(t.labels()[3] == VertexLabel::base_edge(0, 1));
    CHECK(t.labels()[4] == VertexLabel::base_edge(1, 2));
    CHECK(t.labels()[5] == VertexLabel::base_edge(0, 2));
    CHECK(t.labels()[5].str() == "e(0,2)");
}

TEST_CASE("part sizes across codes") {
    for (const auto* spec : {"cycle:4", "complete:4", "matching:6"}) {
        RegularGraph g = as_regular(generate(spec));
        const long long n = g.n(), m = g.m(), r = g.r;
        for (const XyzCode& code : all_codes()) {
            Graph t = xyz_transform(g, code);
            CHECK(t.n() == n + m);
            PartCounts c = count_parts(t, g.n());
            long long want_vv = code.x == Letter::Zero    ? 0
                                : code.x == Letter::One   ? choose2(n)
                                : code.x == Letter::Plus  ? m
                                                          : choose2(n) - m;
            long long lm = m * (r - 1);  // line graph edge count
            long long want_ee = code.y == Letter::Zero    ? 0
                                : code.y == Letter::One   ? choose2(m)
                                : code.y == Letter::Plus  ? lm
                                                          : choose2(m) - lm;
            long long want_ve = code.z == Letter::Zero    ? 0
                                : code.z == Letter::One   ? n * m
                                : code.z == Letter::Plus  ? 2 * m
                                                          : m * (n - 2);
            CHECK(c.vv == want_vv);
            CHECK(c.ee == want_ee);
            CHECK(c.ve == want_ve);
        }
    }
}

TEST_CASE("degree formulas") {
    RegularGraph c4 = as_regular(cycle(4));
    PartDegrees d = transform_degree_check(c4, XyzCode::parse("+-+"));
    CHECK(d.v_part == 4);   // 2r
    CHECK(d.e_part == 3);   // m - 2r + 3

    RegularGraph c5 = as_regular(cycle(5));
    d = transform_degree_check(c5, XyzCode::parse("-++"));
    CHECK(d.v_part == 4);   // n - 1
    CHECK(d.e_part == 4);   // 2r

    d = transform_degree_check(c4, XyzCode::parse("000"));
    CHECK(d.v_part == 0);
    CHECK(d.e_part == 0);

    for (const auto* spec : {"cycle:5", "complete:4", "matching:6"}) {
        RegularGraph g = as_regular(generate(spec));
        for (const XyzCode& code : all_codes()) CHECK_NOTHROW(transform_degree_check(g, code));
    }
}

TEST_CASE("complement of a transformation is the bar-coded transformation") {
    for (const auto* spec : {"cycle:4", "petersen"}) {
        RegularGraph g = as_regular(generate(spec));
        for (const XyzCode& code : all_codes())
            CHECK(complement(xyz_transform(g, code)) ==
                  xyz_transform(g, code.bar_complement()));
    }
}

TEST_CASE("restrictions to the parts recover G and its line graph") {
    RegularGraph g = as_regular(petersen());
    std::vector<int> v_part(g.n()), e_part(g.m());
    for (int i = 0; i < g.n(); ++i) v_part[i] = i;
    for (int j = 0; j < g.m(); ++j) e_part[j] = g.n() + j;

    Graph t = xyz_transform(g, XyzCode::parse("0+0"));
    CHECK(t.induced_subgraph(e_part) == line_graph(g.graph));

    Graph t2 = xyz_transform(g, XyzCode::parse("+00"));
    CHECK(t2.induced_subgraph(v_part) == g.graph);
}

TEST_CASE("m = n cycle swap isomorphism examples") {
    RegularGraph c4 = as_regular(cycle(4));
    CHECK(is_isomorphic(xyz_transform(c4, XyzCode::parse("-++")),
                        xyz_transform(c4, XyzCode::parse("+-+"))));
    RegularGraph c5 = as_regular(cycle(5));
    CHECK(is_isomorphic(xyz_transform(c5, XyzCode::parse("-++")),
                        xyz_transform(c5, XyzCode::parse("+-+"))));
}
