#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regtri/census.hpp"
#include "regtri/graph.hpp"
#include "regtri/rational.hpp"

namespace regtri {

// Sum of squared degrees.
long long phi(const Graph& g);

// Brute-force audit of the degree-square bound
// phi(H) <= (beta^2 - 2*beta + 2) r^2 + (5*beta - 4) r   with e(H) = beta*r.
// With e substituted the bound is the integer e^2 - 2er + 2r^2 + 5e - 4r.
// REPORT: the lemma assumes r > 4500, so small-r violations are data.
struct PhiAudit {
    int r = 0;
    long long e = 0;
    int n_cap = 0;
    Rat beta;            // e / r
    long long phi_max = 0;  // exhaustive maximum over Delta<=r graphs with e edges
    Rat bound;
    bool holds = false;  // phi_max <= bound
    bool equality = false;
    bool equality_structure = false;  // witness is the star-plus-pendant extremal graph
    std::string witness_graph6;
    long long graphs_considered = 0;
};

PhiAudit audit_lemma_phi(int r, long long e, int n_cap);

// Pointwise and aggregate forms of the partition inequality for an arbitrary
// bipartition (X, Y) of a k-regular graph. Unconditional: ASSERT class.
struct PartitionAudit {
    long long x_size = 0;
    long long y_size = 0;
    long long edges_in_x = 0;
    bool pointwise_holds = true;
    long long pointwise_min_slack = 0;  // min over edges in X of T(uv) - (d_Y(u)+d_Y(v)-|Y|)
    std::optional<VertexPair> pointwise_witness;
    bool aggregate_holds = true;
    long long triangle_total = 0;
    long long aggregate_rhs = 0;  // sum over uv in E(X) of (2k - |Y| - d_X(u) - d_X(v))
    long long aggregate_slack = 0;
};

// side[v] = 0 places v in X, 1 in Y.
PartitionAudit audit_partition_inequality(const Graph& g, int k,
                                          const std::vector<std::int8_t>& side);

// Per-triangle double-counting identities in a k-regular graph; m_i counts
// vertices with exactly i neighbors on the triangle. Unconditional: ASSERT.
struct IdentityAudit {
    long long triangles_checked = 0;
    bool holds = true;
    long long min_inequality_slack = 0;  // min over triangles of m2+3m3 - (3k-n+m0)
    std::optional<std::array<int, 3>> witness;
    std::string failed_identity;
};

IdentityAudit audit_triangle_identity(const Graph& g, int k);

// Neighborhood structure around a 5-cycle of G': the N_i, the residue Z, and
// the inequality chain. Everything except N_i disjointness is REPORT class.
struct C5StructureAudit {
    long long n = 0;
    long long k = 0;
    std::array<int, 5> cycle{};
    std::array<long long, 5> n_sizes{};
    std::vector<std::vector<int>> n_sets;
    long long union_size = 0;
    long long z_size = 0;
    std::array<long long, 5> a_i{};
    long long a = 0;
    long long b_doubled = 0;  // 2b = 5k - 2n
    bool n_disjoint = false;       // follows from triangle-freeness alone: asserted by tests
    bool union_sum_holds = false;  // n >= sum |N_i| >= 3 * sum d_G'(v_i) - 5n
    bool n_window_holds = false;   // 3k - a - n <= |N_i| <= 5n - 12k + 3a for all i
    bool z_window_holds = false;   // a/2 - b <= |Z| <= a - 2b

    // tightest margin over all window inequalities, in half-units (den 2)
    Rat min_window_slack() const;
};

C5StructureAudit audit_c5_structure(const HeavyDecomposition& d,
                                    const std::array<int, 5>& cycle);
C5StructureAudit audit_c5_structure(const Graph& g, int k, const std::array<int, 5>& cycle);

}  // namespace regtri
