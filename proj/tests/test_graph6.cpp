#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "regtri/graph6.hpp"
#include "regtri/rng.hpp"

using namespace regtri;
using namespace fixtures;

// Hand-decoded per the format: 'D' -> n=5, body "?{" -> bits 000000 111100,
// upper-triangle column order (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)(0,4)(1,4)(2,4)(3,4).
TEST_CASE("decode D?{ by hand") {
    Graph g = parse_graph6("D?{");
    CHECK(g.vertex_count() == 5);
    std::set<std::pair<int, int>> expect{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
    auto edges = g.edges();
    std::set<std::pair<int, int>> got(edges.begin(), edges.end());
    CHECK(got == expect);
}

TEST_CASE("emit base cases") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph(0)) == "?");
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(emit_graph6(k2) == "A_");  // n=2, single bit set then padding
}

TEST_CASE("round trip identity on random graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        int n = 1 + static_cast<int>(rng.below(70));
        Graph g = gnp(n, rng.uniform01(), seed + 4000);
        std::string s = emit_graph6(g);
        Graph back = parse_graph6(s);
        CHECK(back == g);
        CHECK(emit_graph6(back) == s);  // canonical re-encoding
    }
}

TEST_CASE("boundary orders 62 and 63 use short and long forms") {
    Graph g62 = gnp(62, 0.4, 1);
    std::string s62 = emit_graph6(g62);
    CHECK(s62[0] == static_cast<char>(62 + 63));
    CHECK(parse_graph6(s62) == g62);

    Graph g63 = gnp(63, 0.4, 2);
    std::string s63 = emit_graph6(g63);
    CHECK(s63[0] == '~');
    CHECK(s63.size() == 4 + (63LL * 62 / 2 + 5) / 6);
    CHECK(parse_graph6(s63) == g63);

    Graph g100 = gnp(100, 0.2, 3);
    CHECK(parse_graph6(emit_graph6(g100)) == g100);
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);

    // 'A' -> n=2, needs exactly one body byte
    CHECK_THROWS_AS(parse_graph6("A"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("A??"), Graph6Error);

    // byte outside the 63..126 range
    try {
        parse_graph6("A\n");
        FAIL("expected throw");
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 1);
    }

    // nonzero padding: n=2 has one significant bit, low 5 bits must be clear
    try {
        parse_graph6(std::string("A") + static_cast<char>(63 + 16));
        FAIL("expected throw");
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 1);
    }

    // truncated long order form
    CHECK_THROWS_AS(parse_graph6("~A"), Graph6Error);
    // 8-byte order form unsupported
    CHECK_THROWS_AS(parse_graph6("~~????"), Graph6Error);
    // long form used for an order that fits the short form
    CHECK_THROWS_AS(parse_graph6("~??A"), Graph6Error);
    // order above the configured vertex cap (4097 encoded in long form)
    CHECK_THROWS_AS(parse_graph6("~@?@"), Graph6Error);
}

TEST_CASE("known encodings round out the format") {
    // C5 adjacency: edges (0,1)(1,2)(2,3)(3,4)(0,4)
    Graph c5 = cycle(5);
    Graph back = parse_graph6(emit_graph6(c5));
    CHECK(back == c5);
    CHECK(parse_graph6("D~{") == parse_graph6(emit_graph6(complete(5))));

    // published encoding of the Petersen graph: 3-regular, triangle-free,
    // odd girth 5
    Graph p = parse_graph6("IsP@OkWHG");
    CHECK(p.vertex_count() == 10);
    CHECK(p.is_regular(3));
    CHECK(count_triangles(p).total == 0);
    CHECK(shortest_odd_cycle(p) == 5);
}
