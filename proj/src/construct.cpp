#include "regtri/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "regtri/rng.hpp"

namespace regtri {

const char* param_error_name(ParamError e) {
    switch (e) {
        case ParamError::ok: return "ok";
        case ParamError::parity: return "parity";
        case ParamError::k_low: return "k_below_range";
        case ParamError::k_high: return "k_above_range";
    }
    return "unknown";
}

ParamError check_params(long long n, long long k) {
    if (n <= 0 || n % 2 == 0 || k <= 0 || k % 2 != 0) return ParamError::parity;
    if (5 * k <= 2 * n) return ParamError::k_low;
    if (2 * k >= n) return ParamError::k_high;
    return ParamError::ok;
}

ExtremalParams validate_params(long long n, long long k) {
    switch (check_params(n, k)) {
        case ParamError::ok: break;
        case ParamError::parity:
            throw ParamValidationError(ParamError::parity,
                                       "need odd positive n and even positive k, got n=" +
                                           std::to_string(n) + " k=" + std::to_string(k));
        case ParamError::k_low:
            throw ParamValidationError(ParamError::k_low, "k=" + std::to_string(k) +
                                                              " <= 2n/5 for n=" + std::to_string(n));
        case ParamError::k_high:
            throw ParamValidationError(ParamError::k_high, "k=" + std::to_string(k) +
                                                               " >= n/2 for n=" + std::to_string(n));
    }
    ExtremalParams p{n, k};
    // Implied by the range checks; guard against arithmetic slips.
    if (p.r1() < 0 || p.r2() < 0 || p.r1() > k / 2 || p.r2() > (n - k - 1) / 2)
        throw std::logic_error("factor degrees out of range");
    return p;
}

long long formula_t(const ExtremalParams& p) {
    long long a = p.k / 2;
    long long b = (3 * p.k - p.n - 1) / 2;
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("formula_t overflow");
    return out;
}

CorollaryFloor corollary_floor(long long n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("corollary floor needs odd n");
    CorollaryFloor f;
    f.value = Rat((n + 1) * (n + 1), 50);
    f.equality_attainable = (n + 1) % 5 == 0;
    f.k_star = f.equality_attainable ? 2 * (n + 1) / 5 : 0;
    return f;
}

FactorSpec FactorSpec::circulant(int m, int r) {
    std::vector<int> offs(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) offs[static_cast<std::size_t>(i)] = i;
    return circulant(m, r, std::move(offs));
}

FactorSpec FactorSpec::circulant(int m, int r, std::vector<int> offsets) {
    FactorSpec s;
    s.m = m;
    s.r = r;
    s.mode = Mode::circulant;
    s.offsets = std::move(offsets);
    return s;
}

FactorSpec FactorSpec::random(int m, int r, std::uint64_t seed) {
    FactorSpec s;
    s.m = m;
    s.r = r;
    s.mode = Mode::random;
    s.seed = seed;
    return s;
}

namespace {

void check_factor_spec(const FactorSpec& spec) {
    if (spec.r < 0 || spec.r > spec.m)
        throw std::invalid_argument("factor degree r=" + std::to_string(spec.r) +
                                    " out of range for part size m=" + std::to_string(spec.m));
    if (spec.mode == FactorSpec::Mode::circulant) {
        if (static_cast<int>(spec.offsets.size()) != spec.r)
            throw std::invalid_argument("circulant factor needs exactly r offsets");
        std::vector<char> seen(static_cast<std::size_t>(std::max(spec.m, 1)), 0);
        for (int o : spec.offsets) {
            if (o < 0 || o >= spec.m) throw std::invalid_argument("offset out of range mod m");
            if (seen[static_cast<std::size_t>(o)]++)
                throw std::invalid_argument("duplicate circulant offset");
        }
    }
}

// r random permutations of [m] composed into an r-regular bipartite factor;
// duplicate edges repaired by swapping assignments between rows. Degrees
// above m/2 go through the complement so the repair walk stays in the easy
// regime (plateau moves are allowed to escape Latin-square-style deadlocks).
std::vector<VertexPair> random_factor(int m, int r, std::uint64_t seed) {
    if (r == 0 || m == 0) return {};
    if (2 * r > m) {
        auto co = random_factor(m, m - r, seed);
        std::vector<std::vector<char>> removed(static_cast<std::size_t>(m),
                                               std::vector<char>(static_cast<std::size_t>(m), 0));
        for (auto [i, j] : co) removed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        std::vector<VertexPair> edges;
        edges.reserve(static_cast<std::size_t>(m) * r);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!removed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    edges.emplace_back(i, j);
        return edges;
    }

    Rng rng(seed);
    std::vector<std::vector<int>> perm(static_cast<std::size_t>(r), std::vector<int>(m));
    std::vector<std::vector<int>> used(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(m), 0));
    auto excess = [&](int i, int j) { return used[i][j] > 1 ? used[i][j] - 1 : 0; };
    long long defects = 0;
    auto place = [&](int i, int j) {
        defects -= excess(i, j);
        ++used[i][j];
        defects += excess(i, j);
    };
    auto unplace = [&](int i, int j) {
        defects -= excess(i, j);
        --used[i][j];
        defects += excess(i, j);
    };
    for (int t = 0; t < r; ++t) {
        auto& p = perm[static_cast<std::size_t>(t)];
        for (int i = 0; i < m; ++i) p[i] = i;
        for (int i = m - 1; i > 0; --i) std::swap(p[i], p[rng.below_int(i + 1)]);
        for (int i = 0; i < m; ++i) place(i, p[i]);
    }
    long long attempts = 0;
    const long long cap = 200000LL * m * std::max(r, 1) + 10000;
    while (defects > 0) {
        if (++attempts > cap) throw std::runtime_error("random factor repair did not converge");
        int t = rng.below_int(r);
        int i = rng.below_int(m);
        int j = rng.below_int(m);
        if (i == j) continue;
        auto& p = perm[static_cast<std::size_t>(t)];
        long long before = defects;
        unplace(i, p[i]);
        unplace(j, p[j]);
        std::swap(p[i], p[j]);
        place(i, p[i]);
        place(j, p[j]);
        bool keep = defects < before || (defects == before && rng.below(2));
        if (!keep) {
            unplace(i, p[i]);
            unplace(j, p[j]);
            std::swap(p[i], p[j]);
            place(i, p[i]);
            place(j, p[j]);
        }
    }
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(m) * r);
    for (int t = 0; t < r; ++t)
        for (int i = 0; i < m; ++i) edges.emplace_back(i, perm[static_cast<std::size_t>(t)][i]);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

std::vector<VertexPair> bipartite_factor(const FactorSpec& spec) {
    check_factor_spec(spec);
    std::vector<VertexPair> edges;
    if (spec.mode == FactorSpec::Mode::circulant) {
        edges.reserve(static_cast<std::size_t>(spec.m) * spec.r);
        for (int i = 0; i < spec.m; ++i)
            for (int o : spec.offsets) edges.emplace_back(i, (i + o) % spec.m);
        std::sort(edges.begin(), edges.end());
    } else {
        edges = random_factor(spec.m, spec.r, spec.seed);
    }
    return edges;
}

int apex_vertex(const ExtremalParams& p) { return static_cast<int>(p.n) - 1; }

Graph build_extremal(const ExtremalParams& p, const FactorSpec& factor1, const FactorSpec& factor2) {
    const int n = static_cast<int>(p.n);
    const int k = static_cast<int>(p.k);
    const int half = static_cast<int>(p.half());
    const int a_size = k / 2;                  // |A| = |B|
    const int rest = half - a_size;            // |X \ A| = |Y \ B|
    if (factor1.m != a_size || factor1.r != static_cast<int>(p.r1()))
        throw std::invalid_argument("factor1 must have m=k/2, r=(n-2k+1)/2");
    if (factor2.m != rest || factor2.r != static_cast<int>(p.r2()))
        throw std::invalid_argument("factor2 must have m=(n-k-1)/2, r=(n-2k-1)/2");

    // X = [0, half), Y = [half, 2*half), apex v = n-1.
    const int y0 = half;
    const int apex = n - 1;
    Graph g(n);
    for (int x = 0; x < half; ++x)
        for (int y = 0; y < half; ++y) g.add_edge(x, y0 + y);
    for (auto [i, j] : bipartite_factor(factor1)) g.remove_edge(i, y0 + j);
    for (auto [i, j] : bipartite_factor(factor2)) g.remove_edge(a_size + i, y0 + a_size + j);
    for (int i = 0; i < a_size; ++i) {
        g.add_edge(apex, i);
        g.add_edge(apex, y0 + i);
    }

    if (!g.is_regular(k)) throw std::logic_error("extremal construction is not k-regular");
    if (count_triangles(g).total != formula_t(p))
        throw std::logic_error("extremal construction misses the formula value");
    return g;
}

Graph build_extremal(const ExtremalParams& p) {
    return build_extremal(p, FactorSpec::circulant(static_cast<int>(p.k / 2), static_cast<int>(p.r1())),
                          FactorSpec::circulant(static_cast<int>(p.half() - p.k / 2),
                                                static_cast<int>(p.r2())));
}

Graph build_extremal_random(const ExtremalParams& p, std::uint64_t seed) {
    return build_extremal(
        p, FactorSpec::random(static_cast<int>(p.k / 2), static_cast<int>(p.r1()), seed),
        FactorSpec::random(static_cast<int>(p.half() - p.k / 2), static_cast<int>(p.r2()),
                           seed ^ 0x517cc1b727220a95ULL));
}

namespace {

bool try_pairing(int n, int k, Rng& rng, Graph& out) {
    std::vector<int> stubs(static_cast<std::size_t>(n) * k);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < k; ++c) stubs[static_cast<std::size_t>(v) * k + c] = v;
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
        std::swap(stubs[i], stubs[rng.below_int(i + 1)]);
    Graph g(n);
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v || g.has_edge(u, v)) return false;
        g.add_edge(u, v);
    }
    out = std::move(g);
    return true;
}

// Keep the defective pairing as a multigraph edge list and repair loops and
// duplicate edges with degree-preserving swaps that strictly reduce defects.
Graph switch_repair(int n, int k, Rng& rng) {
    std::vector<int> stubs(static_cast<std::size_t>(n) * k);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < k; ++c) stubs[static_cast<std::size_t>(v) * k + c] = v;
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
        std::swap(stubs[i], stubs[rng.below_int(i + 1)]);

    const std::size_t m = stubs.size() / 2;
    std::vector<VertexPair> edge(m);
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(n, 0));
    auto defect_of = [&](int u, int v) -> long long {
        if (u == v) return mult[u][u];                       // every loop copy is a defect
        return mult[u][v] > 1 ? mult[u][v] - 1 : 0;          // duplicates beyond the first
    };
    auto add = [&](std::size_t i, int u, int v, long long& defects) {
        edge[i] = {u, v};
        defects -= defect_of(u, v);
        ++mult[u][v];
        if (u != v) ++mult[v][u];
        defects += defect_of(u, v);
    };
    auto remove = [&](std::size_t i, long long& defects) {
        auto [u, v] = edge[i];
        defects -= defect_of(u, v);
        --mult[u][v];
        if (u != v) --mult[v][u];
        defects += defect_of(u, v);
    };

    long long defects = 0;
    for (std::size_t i = 0; i < m; ++i) add(i, stubs[2 * i], stubs[2 * i + 1], defects);

    long long attempts = 0;
    const long long cap = 100000LL * n * k + 10000;
    while (defects > 0) {
        if (++attempts > cap) throw std::runtime_error("switch repair did not converge");
        std::size_t i = rng.below(m), j = rng.below(m);
        if (i == j) continue;
        auto [a, b] = edge[i];
        auto [c, d] = edge[j];
        if (defect_of(a, b) == 0 && defect_of(c, d) == 0) continue;
        if (rng.below(2)) std::swap(c, d);
        long long before = defects;
        remove(i, defects);
        remove(j, defects);
        add(i, a, c, defects);
        add(j, b, d, defects);
        if (defects >= before) {  // revert
            remove(i, defects);
            remove(j, defects);
            add(i, a, b, defects);
            add(j, c, d, defects);
        }
    }
    Graph g(n);
    for (auto [u, v] : edge) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph random_regular(int n, int k, std::uint64_t seed) {
    if (k < 0 || k >= n || (static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("infeasible degree sequence: n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    Rng rng(seed);
    Graph g(n);
    if (k == 0) return g;
    const int retry_cap = 100;
    for (int attempt = 0; attempt < retry_cap; ++attempt)
        if (try_pairing(n, k, rng, g)) return g;
    g = switch_repair(n, k, rng);
    return g;
}

}  // namespace regtri
