#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "regtri/graph.hpp"
#include "regtri/rational.hpp"

namespace regtri {

// The (H, G', U) triple: H spans the heavy edges (3*T(e) >= 3k-n-1), U the
// H-high-degree vertices (4*d_H(u)^2 >= 9k), G' = G minus E(H). Membership
// tests are exact integer comparisons throughout.
struct HeavyDecomposition {
    int n = 0;
    int k = 0;
    long long threshold_num = 0;  // 3k - n - 1
    EdgeSet heavy_edges;
    Graph g_prime;
    std::vector<int> u_set;

    bool in_u(int v) const;
};

HeavyDecomposition heavy_decompose(const Graph& g, int k);  // throws if g not k-regular

struct TriangleFreeCheck {
    bool triangle_free = true;
    std::optional<std::array<int, 3>> witness;
};

// Expected true for every k-regular input; a failure is an implementation bug.
TriangleFreeCheck check_gprime_triangle_free(const HeavyDecomposition& d);

struct C5FreeReport {
    bool holds = true;  // G' \ U contains no 5-cycle
    std::optional<std::array<int, 5>> witness;
};

// Report, not assertion: C5-freeness of G' minus U only holds under
// hypotheses that small graphs may violate.
C5FreeReport check_gprime_minus_u_c5_free(const HeavyDecomposition& d);

struct BipartizationReport {
    EdgeSet deletion;            // E(H) plus every G'-edge meeting U
    long long deletion_size = 0;
    long long bound = 0;         // ceil(7.5 * k^1.5)
    bool within_bound = false;   // 4*|D|^2 <= 225*k^3
    bool bipartite_after = false;
    bool eh_bound_holds = false;  // 4*|E(H)| <= 9k
    bool u_bound_holds = false;   // |U|^2 <= 9k
    bool hypothesis_holds = false;  // caller's flag: T(G) <= formula and range OK
};

BipartizationReport bipartization_recipe(const Graph& g, const HeavyDecomposition& d,
                                         bool hypothesis_holds);

long long ceil_7_5_k_pow_3_2(long long k);

// Exhaustive max-cut over 2^(n-1) bipartitions with Gray-code incremental
// updates; n <= 26. threads > 1 splits the scan over fixed prefixes of the
// partition vector; the merge by maximum is schedule-independent.
long long max_cut(const Graph& g, int threads = 1);

// Minimum edge deletions to bipartiteness = e(G) - maxcut(G); exact, n <= 26.
long long exact_bipartization(const Graph& g);

// Local-search cut for reports at larger n. NOT exact: the returned value is
// only an upper bound on the bipartization number.
long long heuristic_bipartization(const Graph& g, std::uint64_t seed);

// Exact rational (4e/3)(e/n - n/4) = e(4e - n^2)/(3n).
Rat moon_moser_floor(const Graph& g);

}  // namespace regtri
