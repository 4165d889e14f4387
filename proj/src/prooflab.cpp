#include "regtri/prooflab.hpp"

#include <algorithm>
#include <stdexcept>

#include "regtri/graph6.hpp"

namespace regtri {

long long phi(const Graph& g) {
    long long s = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long d = g.degree(v);
        s += d * d;
    }
    return s;
}

namespace {

// Edge-addition backtracking over graphs with at most n_cap vertices,
// exactly `e` edges and maximum degree <= r, maximizing phi. Edge slots are
// chosen in lexicographic order; branches whose optimistic phi cannot beat
// the current maximum are cut.
struct PhiSearch {
    int n = 0;
    int r = 0;
    long long e = 0;
    std::vector<VertexPair> slots;
    std::vector<int> deg;
    long long phi_cur = 0;
    long long best = -1;
    std::vector<VertexPair> chosen, best_edges;
    long long nodes = 0;

    void run() {
        deg.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        rec(0, e);
    }

    void rec(std::size_t from, long long left) {
        if (left == 0) {
            if (phi_cur > best) {
                best = phi_cur;
                best_edges = chosen;
            }
            return;
        }
        if (slots.size() - from < static_cast<std::size_t>(left)) return;
        // each further edge raises phi by at most 2(r-1)+2(r-1)+2
        if (best >= 0 && phi_cur + left * (4LL * r - 2) <= best) return;
        for (std::size_t s = from; slots.size() - s >= static_cast<std::size_t>(left); ++s) {
            auto [i, j] = slots[s];
            if (deg[static_cast<std::size_t>(i)] >= r || deg[static_cast<std::size_t>(j)] >= r)
                continue;
            ++nodes;
            long long gain = 2LL * deg[static_cast<std::size_t>(i)] +
                             2LL * deg[static_cast<std::size_t>(j)] + 2;
            ++deg[static_cast<std::size_t>(i)];
            ++deg[static_cast<std::size_t>(j)];
            phi_cur += gain;
            chosen.push_back(slots[s]);
            rec(s + 1, left - 1);
            chosen.pop_back();
            phi_cur -= gain;
            --deg[static_cast<std::size_t>(i)];
            --deg[static_cast<std::size_t>(j)];
            if (best >= 0 && phi_cur + left * (4LL * r - 2) <= best) return;
        }
    }
};

}  // namespace

PhiAudit audit_lemma_phi(int r, long long e, int n_cap) {
    if (r < 1) throw std::invalid_argument("degree cap r must be >= 1");
    if (e < r || 5 * e >= 6 * r)
        throw std::invalid_argument("e must satisfy r <= e < 6r/5 (beta in [1, 6/5))");
    if (n_cap < 2 || n_cap > 12) throw std::invalid_argument("n_cap must lie in [2, 12]");
    if (2 * e > static_cast<long long>(n_cap) * r ||
        e > static_cast<long long>(n_cap) * (n_cap - 1) / 2)
        throw std::invalid_argument("no graph with e edges, Delta <= r fits in n_cap vertices");

    PhiAudit audit;
    audit.r = r;
    audit.e = e;
    audit.n_cap = n_cap;
    audit.beta = Rat(e, r);
    audit.bound = Rat(e * e - 2 * e * r + 2LL * r * r + 5 * e - 4 * r);

    PhiSearch search;
    search.n = n_cap;
    search.r = r;
    search.e = e;
    search.run();
    audit.phi_max = search.best;
    audit.graphs_considered = search.nodes;
    audit.holds = Rat(audit.phi_max) <= audit.bound;
    audit.equality = Rat(audit.phi_max) == audit.bound;

    Graph witness(n_cap);
    for (auto [i, j] : search.best_edges) witness.add_edge(i, j);
    audit.witness_graph6 = emit_graph6(witness);

    if (audit.equality) {
        // Extremal structure: a vertex u of degree r, a neighbor v of degree
        // e - r + 1, every other non-isolated vertex a leaf.
        std::vector<int> degs;
        for (int v = 0; v < n_cap; ++v)
            if (witness.degree(v) > 0) degs.push_back(witness.degree(v));
        std::sort(degs.rbegin(), degs.rend());
        std::vector<int> expect;
        expect.push_back(r);
        expect.push_back(static_cast<int>(e) - r + 1);
        for (long long i = 0; i < e - 1; ++i) expect.push_back(1);
        std::sort(expect.rbegin(), expect.rend());
        bool adjacent_uv = false;
        for (int u = 0; u < n_cap && !adjacent_uv; ++u) {
            if (witness.degree(u) != r) continue;
            for (int v : witness.neighbors(u))
                if (witness.degree(v) == static_cast<int>(e) - r + 1) adjacent_uv = true;
        }
        audit.equality_structure = degs == expect && adjacent_uv;
    }
    return audit;
}

PartitionAudit audit_partition_inequality(const Graph& g, int k,
                                          const std::vector<std::int8_t>& side) {
    if (!g.is_regular(k))
        throw std::invalid_argument("partition audit expects a k-regular graph");
    const int n = g.vertex_count();
    if (static_cast<int>(side.size()) != n)
        throw std::invalid_argument("side vector size mismatch");

    PartitionAudit audit;
    for (int v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? audit.x_size : audit.y_size)++;

    TriangleCensus census = count_triangles(g);
    audit.triangle_total = census.total;

    std::vector<long long> dx(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        g.for_neighbors(v, [&](int w) {
            if (side[static_cast<std::size_t>(w)] == 0) ++dx[static_cast<std::size_t>(v)];
        });

    bool first = true;
    for (const auto& [e, t] : census.per_edge) {
        auto [u, v] = e;
        if (side[static_cast<std::size_t>(u)] != 0 || side[static_cast<std::size_t>(v)] != 0)
            continue;
        ++audit.edges_in_x;
        // d_Y(u) + d_Y(v) - |Y| = 2k - |Y| - d_X(u) - d_X(v)
        long long rhs = 2LL * k - audit.y_size - dx[static_cast<std::size_t>(u)] -
                        dx[static_cast<std::size_t>(v)];
        audit.aggregate_rhs += rhs;
        long long slack = t - rhs;
        if (first || slack < audit.pointwise_min_slack) {
            audit.pointwise_min_slack = slack;
            first = false;
        }
        if (slack < 0) {
            audit.pointwise_holds = false;
            if (!audit.pointwise_witness) audit.pointwise_witness = e;
        }
    }
    audit.aggregate_slack = audit.triangle_total - audit.aggregate_rhs;
    audit.aggregate_holds = audit.aggregate_slack >= 0;
    return audit;
}

IdentityAudit audit_triangle_identity(const Graph& g, int k) {
    if (!g.is_regular(k))
        throw std::invalid_argument("triangle identity audit expects a k-regular graph");
    const int n = g.vertex_count();
    IdentityAudit audit;
    TriangleCensus census = count_triangles(g);

    auto fail = [&](int x, int y, int z, const char* which) {
        audit.holds = false;
        if (!audit.witness) {
            audit.witness = std::array<int, 3>{x, y, z};
            audit.failed_identity = which;
        }
    };

    bool first = true;
    for (int x = 0; x < n && audit.holds; ++x) {
        auto nx = g.neighbors(x);
        for (int y : nx) {
            if (y <= x) continue;
            for (int z : nx) {
                if (z <= y || !g.has_edge(y, z)) continue;
                ++audit.triangles_checked;
                long long m[4] = {0, 0, 0, 0};
                for (int w = 0; w < n; ++w) {
                    int c = (g.has_edge(w, x) ? 1 : 0) + (g.has_edge(w, y) ? 1 : 0) +
                            (g.has_edge(w, z) ? 1 : 0);
                    ++m[c];
                }
                if (m[0] + m[1] + m[2] + m[3] != n) fail(x, y, z, "sum m_i = n");
                if (m[1] + 2 * m[2] + 3 * m[3] != 3LL * k) fail(x, y, z, "sum i*m_i = 3k");
                long long edge_sum = census.edge_triangles(x, y) + census.edge_triangles(x, z) +
                                     census.edge_triangles(y, z);
                if (edge_sum != m[2] + 3 * m[3]) fail(x, y, z, "T(e1)+T(e2)+T(e3) = m2+3m3");
                long long slack = m[2] + 3 * m[3] - (3LL * k - n + m[0]);
                if (first || slack < audit.min_inequality_slack) {
                    audit.min_inequality_slack = slack;
                    first = false;
                }
                if (slack < 0) fail(x, y, z, "m2+3m3 >= 3k-n+m0");
            }
        }
    }
    return audit;
}

C5StructureAudit audit_c5_structure(const HeavyDecomposition& d, const std::array<int, 5>& cycle) {
    const Graph& gp = d.g_prime;
    const int n = gp.vertex_count();
    const long long k = d.k;

    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j)
            if (cycle[static_cast<std::size_t>(i)] == cycle[static_cast<std::size_t>(j)])
                throw std::invalid_argument("cycle vertices not distinct");
        if (!gp.has_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % 5)]))
            throw std::invalid_argument("given vertices are not a 5-cycle of G'");
    }
    if (!check_gprime_triangle_free(d).triangle_free)
        throw std::invalid_argument("G' is not triangle-free");

    C5StructureAudit audit;
    audit.n = n;
    audit.k = k;
    audit.cycle = cycle;
    audit.n_sets.assign(5, {});

    std::vector<int> membership(static_cast<std::size_t>(n), -1);
    bool disjoint = true;
    std::vector<long long> dprime(5);
    for (int i = 0; i < 5; ++i) {
        int prev = cycle[static_cast<std::size_t>((i + 4) % 5)];
        int next = cycle[static_cast<std::size_t>((i + 1) % 5)];
        dprime[static_cast<std::size_t>(i)] = gp.degree(cycle[static_cast<std::size_t>(i)]);
        audit.a_i[static_cast<std::size_t>(i)] = k - dprime[static_cast<std::size_t>(i)];
        gp.for_neighbors(prev, [&](int w) {
            if (!gp.has_edge(next, w)) return;
            audit.n_sets[static_cast<std::size_t>(i)].push_back(w);
            if (membership[static_cast<std::size_t>(w)] != -1) disjoint = false;
            membership[static_cast<std::size_t>(w)] = i;
        });
        audit.n_sizes[static_cast<std::size_t>(i)] =
            static_cast<long long>(audit.n_sets[static_cast<std::size_t>(i)].size());
    }
    audit.n_disjoint = disjoint;
    long long union_size = 0;
    for (int v = 0; v < n; ++v)
        if (membership[static_cast<std::size_t>(v)] != -1) ++union_size;
    audit.union_size = union_size;
    audit.z_size = n - union_size;

    audit.a = 0;
    long long dsum = 0;
    for (int i = 0; i < 5; ++i) {
        audit.a += audit.a_i[static_cast<std::size_t>(i)];
        dsum += dprime[static_cast<std::size_t>(i)];
    }
    audit.b_doubled = 5 * k - 2LL * n;

    long long sum_sizes = 0;
    for (auto s : audit.n_sizes) sum_sizes += s;
    audit.union_sum_holds = n >= sum_sizes && sum_sizes >= 3 * dsum - 5LL * n;

    bool window = true;
    for (int i = 0; i < 5; ++i) {
        long long sz = audit.n_sizes[static_cast<std::size_t>(i)];
        if (!(3 * k - audit.a - n <= sz && sz <= 5LL * n - 12 * k + 3 * audit.a)) window = false;
    }
    audit.n_window_holds = window;

    // a/2 - b <= |Z| <= a - 2b with 2b = 5k - 2n, compared in doubled integers
    long long lower_doubled = audit.a - audit.b_doubled;
    long long upper = audit.a - audit.b_doubled;  // a - 2b is already integral
    audit.z_window_holds = lower_doubled <= 2 * audit.z_size && audit.z_size <= upper;
    return audit;
}

Rat C5StructureAudit::min_window_slack() const {
    // doubled-scale margins so the half-integer bound a/2 - b joins in
    long long best = 0;
    bool first = true;
    auto consider = [&](long long doubled) {
        if (first || doubled < best) {
            best = doubled;
            first = false;
        }
    };
    for (auto sz : n_sizes) {
        consider(2 * (sz - (3 * k - a - n)));
        consider(2 * ((5 * n - 12 * k + 3 * a) - sz));
    }
    consider(2 * z_size - (a - b_doubled));
    consider(2 * ((a - b_doubled) - z_size));
    return Rat(best, 2);
}

C5StructureAudit audit_c5_structure(const Graph& g, int k, const std::array<int, 5>& cycle) {
    return audit_c5_structure(heavy_decompose(g, k), cycle);
}

}  // namespace regtri
