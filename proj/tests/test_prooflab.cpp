#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "regtri/construct.hpp"
#include "regtri/graph6.hpp"
#include "regtri/prooflab.hpp"

using namespace regtri;
using namespace fixtures;

namespace {

// independent naive phi
long long phi_reference(const Graph& g) {
    long long s = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long d = 0;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != v && g.has_edge(v, w)) ++d;
        s += d * d;
    }
    return s;
}

}  // namespace

TEST_CASE("phi on fixed and random graphs") {
    CHECK(phi(path(3)) == 6);      // degrees 1,2,1
    CHECK(phi(complete(4)) == 36);  // 4 * 9
    CHECK(phi(Graph(6)) == 0);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gnp(20, 0.3, seed);
        CHECK(phi(g) == phi_reference(g));
    }
}

TEST_CASE("degree-square bound audit at tiny sizes") {
    // r=4, e=4 (beta = 1): star K_{1,4} attains the bound 20
    PhiAudit a44 = audit_lemma_phi(4, 4, 10);
    CHECK(a44.phi_max == 20);
    CHECK(a44.bound == Rat(20));
    CHECK(a44.holds);
    CHECK(a44.equality);
    CHECK(a44.equality_structure);
    Graph w = parse_graph6(a44.witness_graph6);
    CHECK(phi(w) == 20);
    CHECK(w.edge_count() == 4);

    // r=5, e=5: bound 30 = phi(K_{1,5})
    PhiAudit a55 = audit_lemma_phi(5, 5, 10);
    CHECK(a55.phi_max == 30);
    CHECK(a55.bound == Rat(30));
    CHECK(a55.equality);
    CHECK(a55.equality_structure);

    // r=1, e=1: a single edge, phi = 2
    PhiAudit a11 = audit_lemma_phi(1, 1, 4);
    CHECK(a11.phi_max == 2);
    CHECK(a11.bound == Rat(2));
    CHECK(a11.equality);

    // r=6, e=7 (beta = 7/6): bound 49 - 84 + 72 + 35 - 24 = 48
    PhiAudit a67 = audit_lemma_phi(6, 7, 9);
    CHECK(a67.bound == Rat(48));
    CHECK(a67.holds == (a67.phi_max <= 48));
    Graph w67 = parse_graph6(a67.witness_graph6);
    CHECK(w67.edge_count() == 7);
    int delta = 0;
    for (int v = 0; v < w67.vertex_count(); ++v) delta = std::max(delta, w67.degree(v));
    CHECK(delta <= 6);
}

TEST_CASE("degree-square audit rejects out-of-range input") {
    CHECK_THROWS_AS(audit_lemma_phi(5, 6, 10), std::invalid_argument);  // beta = 6/5 excluded
    CHECK_THROWS_AS(audit_lemma_phi(4, 3, 10), std::invalid_argument);  // beta < 1
    CHECK_THROWS_AS(audit_lemma_phi(4, 4, 13), std::invalid_argument);  // n_cap too large
    CHECK_THROWS_AS(audit_lemma_phi(4, 4, 2), std::invalid_argument);   // does not fit
    CHECK_THROWS_AS(audit_lemma_phi(0, 0, 5), std::invalid_argument);
}

TEST_CASE("partition inequality on worked examples") {
    // K4 with X = {0,1}: the single X-edge has T = 2 and slack 0
    std::vector<std::int8_t> side{0, 0, 1, 1};
    PartitionAudit a = audit_partition_inequality(complete(4), 3, side);
    CHECK(a.edges_in_x == 1);
    CHECK(a.pointwise_holds);
    CHECK(a.pointwise_min_slack == 0);
    CHECK(a.aggregate_holds);

    // everything in Y: the bound degenerates to T(G) >= 0
    std::vector<std::int8_t> all_y{1, 1, 1, 1};
    PartitionAudit b = audit_partition_inequality(complete(4), 3, all_y);
    CHECK(b.edges_in_x == 0);
    CHECK(b.aggregate_rhs == 0);
    CHECK(b.aggregate_holds);

    // extremal (13,6), X = its X-part plus apex
    ExtremalParams p = validate_params(13, 6);
    Graph g = build_extremal(p);
    std::vector<std::int8_t> part(13, 1);
    for (int v = 0; v < 6; ++v) part[v] = 0;
    part[12] = 0;
    PartitionAudit c = audit_partition_inequality(g, 6, part);
    CHECK(c.pointwise_holds);
    CHECK(c.aggregate_holds);
    CHECK(c.aggregate_slack >= 0);

    CHECK_THROWS_AS(audit_partition_inequality(path(4), 1, {0, 0, 1, 1}), std::invalid_argument);
}

TEST_CASE("partition inequality holds for random partitions of regular graphs") {
    int audited = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 10 + static_cast<int>(seed % 16);
        int k = 4 + 2 * static_cast<int>(seed % 3);
        if (k >= n || (n * k) % 2 != 0) continue;
        Graph g = random_regular(n, k, seed + 31);
        Rng prng(seed);
        std::vector<std::int8_t> side(static_cast<std::size_t>(n));
        for (auto& s : side) s = static_cast<std::int8_t>(prng.below(2));
        PartitionAudit a = audit_partition_inequality(g, k, side);
        CHECK(a.pointwise_holds);
        CHECK(a.aggregate_holds);
        ++audited;
    }
    CHECK(audited >= 40);
}

TEST_CASE("triangle identity on worked examples") {
    IdentityAudit k4 = audit_triangle_identity(complete(4), 3);
    CHECK(k4.holds);
    CHECK(k4.triangles_checked == 4);

    IdentityAudit k5 = audit_triangle_identity(complete(5), 4);
    CHECK(k5.holds);
    CHECK(k5.triangles_checked == 10);

    IdentityAudit c5 = audit_triangle_identity(cycle(5), 2);
    CHECK(c5.holds);  // vacuous
    CHECK(c5.triangles_checked == 0);

    CHECK_THROWS_AS(audit_triangle_identity(path(4), 2), std::invalid_argument);
}

TEST_CASE("triangle identity holds across random regular graphs") {
    long long triangles = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 9 + static_cast<int>(seed % 14);
        int k = 4 + 2 * static_cast<int>(seed % 3);
        if (k >= n || (n * k) % 2 != 0) continue;
        Graph g = random_regular(n, k, seed + 77);
        IdentityAudit a = audit_triangle_identity(g, k);
        CHECK(a.holds);
        triangles += a.triangles_checked;
    }
    CHECK(triangles > 100);
}

TEST_CASE("c5 structure audit recovers the blow-up parts") {
    // balanced C5 blow-up, m = 3: 6-regular on 15 vertices, no heavy edges
    Graph g = c5_blowup(3);
    REQUIRE(g.is_regular(6));
    std::array<int, 5> cyc{0, 3, 6, 9, 12};  // one vertex per part
    C5StructureAudit a = audit_c5_structure(g, 6, cyc);
    CHECK(a.n_disjoint);
    CHECK(a.z_size == 0);
    CHECK(a.union_size == 15);
    CHECK(a.a == 0);
    CHECK(a.b_doubled == 0);
    for (auto s : a.n_sizes) CHECK(s == 3);  // N_i is exactly the i-th part
    std::set<int> part1(a.n_sets[0].begin(), a.n_sets[0].end());
    CHECK(part1 == std::set<int>{0, 1, 2});
    CHECK(a.union_sum_holds);
    CHECK(a.n_window_holds);
    CHECK(a.z_window_holds);
}

TEST_CASE("c5 structure audit error paths") {
    // extremal (13,6): G' has no 5-cycle at all, so any claimed cycle fails
    Graph g = build_extremal(validate_params(13, 6));
    std::array<int, 5> fake{0, 1, 2, 3, 4};
    CHECK_THROWS_AS(audit_c5_structure(g, 6, fake), std::invalid_argument);

    std::array<int, 5> dup{0, 1, 2, 3, 0};
    CHECK_THROWS_AS(audit_c5_structure(c5_blowup(2), 4, dup), std::invalid_argument);
}

TEST_CASE("c5 structure audit on random regular graphs") {
    int audited = 0;
    for (std::uint64_t seed = 0; seed < 40 && audited < 8; ++seed) {
        Graph g = random_regular(13, 6, seed);
        HeavyDecomposition d = heavy_decompose(g, 6);
        std::vector<int> all(13);
        for (int v = 0; v < 13; ++v) all[v] = v;
        auto c5 = find_c5(d.g_prime, all);
        if (!c5) continue;
        C5StructureAudit a = audit_c5_structure(d, *c5);
        CHECK(a.n_disjoint);  // consequence of triangle-freeness alone
        // N_i members really are common G'-neighbors of the cycle ends
        for (int i = 0; i < 5; ++i) {
            int prev = a.cycle[(i + 4) % 5], next = a.cycle[(i + 1) % 5];
            for (int w : a.n_sets[i]) {
                CHECK(d.g_prime.has_edge(prev, w));
                CHECK(d.g_prime.has_edge(next, w));
            }
        }
        ++audited;
    }
    CHECK(audited > 0);
}
