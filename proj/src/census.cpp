#include "regtri/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "regtri/rng.hpp"

namespace regtri {

bool HeavyDecomposition::in_u(int v) const {
    return std::binary_search(u_set.begin(), u_set.end(), v);
}

HeavyDecomposition heavy_decompose(const Graph& g, int k) {
    if (!g.is_regular(k))
        throw std::invalid_argument("heavy_decompose: graph is not " + std::to_string(k) +
                                    "-regular");
    const int n = g.vertex_count();
    HeavyDecomposition d;
    d.n = n;
    d.k = k;
    d.threshold_num = 3LL * k - n - 1;

    TriangleCensus census = count_triangles(g);
    std::vector<long long> h_degree(static_cast<std::size_t>(n), 0);
    for (const auto& [e, t] : census.per_edge) {
        if (3 * t >= d.threshold_num) {
            d.heavy_edges.pairs.push_back(e);
            ++h_degree[static_cast<std::size_t>(e.first)];
            ++h_degree[static_cast<std::size_t>(e.second)];
        }
    }
    d.g_prime = delete_edges(g, d.heavy_edges);
    for (int v = 0; v < n; ++v)
        if (4 * h_degree[static_cast<std::size_t>(v)] * h_degree[static_cast<std::size_t>(v)] >=
            9LL * k)
            d.u_set.push_back(v);
    return d;
}

TriangleFreeCheck check_gprime_triangle_free(const HeavyDecomposition& d) {
    TriangleFreeCheck res;
    const Graph& gp = d.g_prime;
    const int words = gp.words_per_row();
    for (auto [u, v] : gp.edges()) {
        for (int w = 0; w < words; ++w) {
            std::uint64_t common = gp.row(u)[w] & gp.row(v)[w];
            if (common) {
                res.triangle_free = false;
                res.witness = std::array<int, 3>{u, v, w * 64 + __builtin_ctzll(common)};
                return res;
            }
        }
    }
    return res;
}

C5FreeReport check_gprime_minus_u_c5_free(const HeavyDecomposition& d) {
    C5FreeReport rep;
    std::vector<int> keep;
    for (int v = 0; v < d.g_prime.vertex_count(); ++v)
        if (!d.in_u(v)) keep.push_back(v);

    // G' is triangle-free, so its subgraphs have odd girth >= 5: a 5-cycle
    // exists iff the shortest odd cycle has length exactly 5. One BFS sweep
    // instead of closing 5-paths, which matters at large n.
    Graph sub = induced(d.g_prime, keep);
    auto odd = shortest_odd_cycle_witness(sub);
    if (!odd) return rep;  // bipartite, no odd cycle at all
    if (odd->size() == 3) throw std::logic_error("triangle inside G'");
    if (odd->size() != 5) return rep;  // odd girth >= 7
    rep.holds = false;
    std::array<int, 5> cyc{};
    for (int i = 0; i < 5; ++i) cyc[static_cast<std::size_t>(i)] = keep[(*odd)[static_cast<std::size_t>(i)]];
    rep.witness = cyc;
    return rep;
}

long long ceil_7_5_k_pow_3_2(long long k) {
    // Smallest B with 4*B^2 >= 225*k^3.
    if (k < 0) throw std::invalid_argument("negative k");
    long double approx = 7.5L * powl(static_cast<long double>(k), 1.5L);
    long long b = static_cast<long long>(approx);
    while (static_cast<__int128>(4) * b * b < static_cast<__int128>(225) * k * k * k) ++b;
    while (b > 0 &&
           static_cast<__int128>(4) * (b - 1) * (b - 1) >= static_cast<__int128>(225) * k * k * k)
        --b;
    return b;
}

BipartizationReport bipartization_recipe(const Graph& g, const HeavyDecomposition& d,
                                         bool hypothesis_holds) {
    BipartizationReport rep;
    rep.hypothesis_holds = hypothesis_holds;
    rep.deletion = d.heavy_edges;
    for (auto [u, v] : d.g_prime.edges())
        if (d.in_u(u) || d.in_u(v)) rep.deletion.pairs.emplace_back(u, v);
    std::sort(rep.deletion.pairs.begin(), rep.deletion.pairs.end());
    rep.deletion_size = static_cast<long long>(rep.deletion.size());

    const long long k = d.k;
    rep.bound = ceil_7_5_k_pow_3_2(k);
    rep.within_bound = static_cast<__int128>(4) * rep.deletion_size * rep.deletion_size <=
                       static_cast<__int128>(225) * k * k * k;
    rep.eh_bound_holds = 4 * static_cast<long long>(d.heavy_edges.size()) <= 9 * k;
    rep.u_bound_holds =
        static_cast<long long>(d.u_set.size()) * static_cast<long long>(d.u_set.size()) <= 9 * k;
    rep.bipartite_after = is_bipartite(delete_edges(g, rep.deletion)).bipartite;
    return rep;
}

namespace {

// Gray-code walk over the `low` vertices 1..low with the higher vertices
// frozen at `prefix_side`; one O(1)-word cut update per step.
long long gray_scan(const std::vector<std::uint32_t>& row, int low, std::uint32_t prefix_side,
                    long long start_cut) {
    std::uint32_t side1 = prefix_side;
    long long cut = start_cut;
    long long best = cut;
    const std::uint64_t total = low >= 0 ? (1ULL << low) : 1;
    for (std::uint64_t it = 1; it < total; ++it) {
        int flip = __builtin_ctzll(it) + 1;
        std::uint32_t r = row[static_cast<std::size_t>(flip)];
        int cross = __builtin_popcount(r & (((side1 >> flip) & 1u) ? ~side1 : side1));
        int deg = __builtin_popcount(r);
        // flipping moves cross edges to same-side and vice versa
        cut += deg - 2 * cross;
        side1 ^= 1u << flip;
        if (cut > best) best = cut;
    }
    return best;
}

long long cut_of(const Graph& g, std::uint32_t side1) {
    long long cut = 0;
    for (auto [u, v] : g.edges())
        if (((side1 >> u) & 1u) != ((side1 >> v) & 1u)) ++cut;
    return cut;
}

}  // namespace

long long max_cut(const Graph& g, int threads) {
    const int n = g.vertex_count();
    if (n > 26) throw std::invalid_argument("exhaustive max-cut limited to n <= 26");
    if (n <= 1) return 0;

    std::vector<std::uint32_t> row(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        row[static_cast<std::size_t>(u)] |= 1u << v;
        row[static_cast<std::size_t>(v)] |= 1u << u;
    }

    // Vertex 0 stays on side 0; the other n-1 vertices are scanned.
    if (threads <= 1 || n < 16) return gray_scan(row, n - 1, 0, cut_of(g, 0));

    int prefix_bits = 1;
    while ((1 << prefix_bits) < 4 * threads && prefix_bits < n - 2) ++prefix_bits;
    const int low = n - 1 - prefix_bits;
    const std::uint32_t prefixes = 1u << prefix_bits;
    std::vector<long long> best(prefixes, 0);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::uint32_t p = next.fetch_add(1);
            if (p >= prefixes) return;
            std::uint32_t side1 = p << (low + 1);
            best[p] = gray_scan(row, low, side1, cut_of(g, side1));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    long long out = 0;
    for (long long b : best) out = std::max(out, b);
    return out;
}

long long exact_bipartization(const Graph& g) { return g.edge_count() - max_cut(g); }

long long heuristic_bipartization(const Graph& g, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    Rng rng(seed);
    std::vector<std::int8_t> side(static_cast<std::size_t>(n));
    long long best_cut = 0;
    for (int restart = 0; restart < 8; ++restart) {
        for (auto& s : side) s = static_cast<std::int8_t>(rng.below(2));
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < n; ++v) {
                int same = 0, cross = 0;
                g.for_neighbors(v, [&](int w) { (side[w] == side[v] ? same : cross)++; });
                if (same > cross) {
                    side[static_cast<std::size_t>(v)] ^= 1;
                    improved = true;
                }
            }
        }
        long long cut = 0;
        for (auto [u, v] : g.edges())
            if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) ++cut;
        best_cut = std::max(best_cut, cut);
    }
    return g.edge_count() - best_cut;
}

Rat moon_moser_floor(const Graph& g) {
    const long long n = g.vertex_count();
    const long long e = g.edge_count();
    if (n == 0) return Rat(0);
    return Rat(e * (4 * e - n * n), 3 * n);
}

}  // namespace regtri
