#include "regtri/minimize.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <climits>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "regtri/graph6.hpp"

namespace regtri {

namespace {

long long row_intersection(const Graph& g, int u, int v) {
    long long c = 0;
    const std::uint64_t* a = g.row(u);
    const std::uint64_t* b = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
}

}  // namespace

SwitchChain::SwitchChain(Graph g, Rng rng) : g_(std::move(g)), rng_(rng) {
    edges_ = g_.edges();
    triangles_ = count_triangles(g_).total;
}

std::optional<SwitchChain::Proposal> SwitchChain::propose_and_apply() {
    if (edges_.size() < 2) return std::nullopt;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::size_t ei = rng_.below(edges_.size());
        std::size_t ej = rng_.below(edges_.size());
        if (ei == ej) continue;
        auto [a, b] = edges_[ei];
        auto [c, d] = edges_[ej];
        if (rng_.below(2)) std::swap(c, d);
        if (a == c || a == d || b == c || b == d) continue;
        if (g_.has_edge(a, c) || g_.has_edge(b, d)) continue;

        long long delta = 0;
        delta -= row_intersection(g_, a, b);
        g_.remove_edge(a, b);
        delta -= row_intersection(g_, c, d);
        g_.remove_edge(c, d);
        delta += row_intersection(g_, a, c);
        g_.add_edge(a, c);
        delta += row_intersection(g_, b, d);
        g_.add_edge(b, d);
        ++evaluations_;
        return Proposal{a, b, c, d, ei, ej, delta};
    }
    return std::nullopt;
}

void SwitchChain::revert(const Proposal& p) {
    g_.remove_edge(p.b, p.d);
    g_.remove_edge(p.a, p.c);
    g_.add_edge(p.c, p.d);
    g_.add_edge(p.a, p.b);
}

bool SwitchChain::step(double temp) {
    auto p = propose_and_apply();
    if (!p) return false;
    bool accept = p->delta <= 0;
    if (!accept) {
        double threshold = std::exp(-static_cast<double>(p->delta) / std::max(temp, 1e-300));
        accept = rng_.uniform01() < threshold;
    }
    if (!accept) {
        revert(*p);
        return false;
    }
    triangles_ += p->delta;
    edges_[p->ei] = {std::min(p->a, p->c), std::max(p->a, p->c)};
    edges_[p->ej] = {std::min(p->b, p->d), std::max(p->b, p->d)};
    return true;
}

bool SwitchChain::force_step() {
    auto p = propose_and_apply();
    if (!p) return false;
    triangles_ += p->delta;
    edges_[p->ei] = {std::min(p->a, p->c), std::max(p->a, p->c)};
    edges_[p->ej] = {std::min(p->b, p->d), std::max(p->b, p->d)};
    return true;
}

Graph switch_step(const Graph& g, Rng& rng, int retry_cap) {
    auto edges = g.edges();
    if (edges.size() < 2) return g;
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        auto [a, b] = edges[rng.below(edges.size())];
        auto [c, d] = edges[rng.below(edges.size())];
        if (rng.below(2)) std::swap(c, d);
        if (a == c || a == d || b == c || b == d) continue;
        if (g.has_edge(a, c) || g.has_edge(b, d)) continue;
        Graph out = g;
        out.remove_edge(a, b);
        out.remove_edge(c, d);
        out.add_edge(a, c);
        out.add_edge(b, d);
        return out;
    }
    return g;
}

void SearchConfig::validate() const {
    if (restarts <= 0 || steps_per_restart <= 0)
        throw std::invalid_argument("restarts and steps_per_restart must be positive");
    if (decay <= 0.0 || decay >= 1.0) throw std::invalid_argument("decay must lie in (0,1)");
    if (temp_floor <= 0.0) throw std::invalid_argument("temperature floor must be positive");
    if (seed_mode == SeedMode::provided && !provided.has_value())
        throw std::invalid_argument("provided seed mode without a graph");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

void append_graph6_line(const std::string& path, const std::string& g6) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open results file: " + path);
    out << g6 << "\n";
}

namespace {

struct RestartResult {
    long long best = LLONG_MAX;
    std::string best_g6;
    long long evaluations = 0;
};

RestartResult run_one_restart(const ExtremalParams& params, const SearchConfig& cfg, int restart) {
    const int n = static_cast<int>(params.n);
    const int k = static_cast<int>(params.k);
    Graph start(0);
    switch (cfg.seed_mode) {
        case SearchConfig::SeedMode::random_graph:
            start = random_regular(n, k, Rng::split(cfg.seed, 2 * restart + 1).next());
            break;
        case SearchConfig::SeedMode::extremal:
            start = build_extremal(params);
            break;
        case SearchConfig::SeedMode::provided:
            start = *cfg.provided;
            break;
    }
    SwitchChain chain(std::move(start), Rng::split(cfg.seed, 2 * restart));
    RestartResult res;
    res.best = chain.triangles();
    res.best_g6 = emit_graph6(chain.graph());
    double temp = cfg.t0 < 0 ? static_cast<double>(k) : cfg.t0;
    for (long long s = 0; s < cfg.steps_per_restart; ++s) {
        chain.step(temp);
        if (chain.triangles() < res.best) {
            res.best = chain.triangles();
            res.best_g6 = emit_graph6(chain.graph());
        }
        temp = std::max(cfg.temp_floor, temp * cfg.decay);
#ifndef NDEBUG
        assert(chain.graph().is_regular(k));
#endif
        if ((s + 1) % 1000 == 0 && !chain.graph().is_regular(k))
            throw std::logic_error("switch chain left the k-regular family");
    }
    res.evaluations = chain.evaluations();
    return res;
}

}  // namespace

SearchReport anneal_minimize(const ExtremalParams& params, const SearchConfig& cfg) {
    cfg.validate();
    if (params.n > 2000) throw std::invalid_argument("annealing census loop expects n <= 2000");

    SearchReport rep;
    rep.n = static_cast<int>(params.n);
    rep.k = static_cast<int>(params.k);
    rep.mode = "anneal";
    rep.seed = cfg.seed;
    rep.formula_valid = check_params(params.n, params.k) == ParamError::ok;
    if (rep.formula_valid) rep.formula_value = formula_t(params);

    std::vector<RestartResult> results(static_cast<std::size_t>(cfg.restarts));
    const int workers = std::max(1, std::min(cfg.threads, cfg.restarts));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int r = next.fetch_add(1);
            if (r >= cfg.restarts) return;
            results[static_cast<std::size_t>(r)] = run_one_restart(params, cfg, r);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    int best_idx = 0;
    for (int r = 1; r < cfg.restarts; ++r)
        if (results[static_cast<std::size_t>(r)].best < results[static_cast<std::size_t>(best_idx)].best)
            best_idx = r;  // ties keep the lowest restart index
    for (const auto& r : results) rep.evaluations += r.evaluations;
    rep.best_count = results[static_cast<std::size_t>(best_idx)].best;
    rep.best_graph6 = results[static_cast<std::size_t>(best_idx)].best_g6;
    rep.exact = false;

    if (rep.formula_valid) {
        rep.gap = rep.best_count - rep.formula_value;
        if (rep.gap < 0) {
            // A sub-formula graph would refute the conjecture at this point:
            // persist the witness before anything else can fail.
            std::string path =
                cfg.results_path.empty() ? "regtri_counterexamples.g6" : cfg.results_path;
            append_graph6_line(path, rep.best_graph6);
            rep.counterexample = true;
        }
    }
    if (!cfg.results_path.empty() && !rep.counterexample)
        append_graph6_line(cfg.results_path, rep.best_graph6);
    return rep;
}

// ---------------------------------------------------------------------------
// Backtracking enumeration of labeled k-regular graphs.
// ---------------------------------------------------------------------------

namespace {

constexpr int kEnumMaxVertices = 64;

struct EnumEngine {
    int n = 0;
    int k = 0;

    std::uint64_t adj[kEnumMaxVertices] = {};
    int deg[kEnumMaxVertices] = {};
    long long partial_tri = 0;
    long long nodes = 0;
    long long leaves = 0;

    // branch and bound
    bool use_bound = false;
    bool strict = true;  // prune partial >= bound(); otherwise partial > bound()
    std::atomic<long long>* shared_bound = nullptr;
    long long local_bound = LLONG_MAX;

    // prefix control: `fixed` explores only completions of the prefix,
    // `resume` continues a depth-first run suspended at the prefix.
    enum class PrefixMode { none, fixed, resume };
    PrefixMode prefix_mode = PrefixMode::none;
    std::vector<std::uint64_t> prefix;
    bool prefix_live = false;

    long long budget = 0;  // node cap; 0 = unlimited
    bool aborted = false;
    bool stop_requested = false;  // cooperative early stop (no checkpoint semantics)
    std::vector<std::uint64_t> abort_path;

    std::function<void(EnumEngine&)> on_leaf;

    long long bound() const {
        return shared_bound ? shared_bound->load(std::memory_order_relaxed) : local_bound;
    }
    bool pruned(long long t) const { return use_bound && (strict ? t >= bound() : t > bound()); }

    static std::uint64_t bits_above(std::uint64_t mask, int v) {
        return v + 1 >= 64 ? 0 : mask & (~0ULL << (v + 1));
    }

    Graph materialize() const {
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            std::uint64_t bits = bits_above(adj[u], u);
            while (bits) {
                int v = __builtin_ctzll(bits);
                g.add_edge(u, v);
                bits &= bits - 1;
            }
        }
        return g;
    }

    void run() {
        prefix_live = prefix_mode != PrefixMode::none;
        dfs_row(0);
    }

    bool row_feasible(int next_u) const {
        long long stubs = 0;
        const std::uint64_t future =
            next_u >= 64 ? 0 : (~0ULL << next_u) & (n == 64 ? ~0ULL : ((1ULL << n) - 1));
        for (int w = next_u; w < n; ++w) {
            int rem = k - deg[w];
            if (rem < 0) return false;
            // w's remaining partners live in [next_u, n) \ ({w} u N(w))
            int slots = __builtin_popcountll(future & ~adj[w] & ~(1ULL << w));
            if (rem > slots) return false;
            stubs += rem;
        }
        if (stubs % 2 != 0) return false;
        return true;
    }

    void dfs_row(int u) {
        if (aborted || stop_requested) return;
        if (u == n) {
            ++leaves;
            on_leaf(*this);
            return;
        }
        if (budget > 0 && nodes >= budget && u > 0) {
            aborted = true;
            abort_path.clear();
            for (int i = 0; i < u; ++i) abort_path.push_back(bits_above(adj[i], i));
            return;
        }
        if (prefix_live && prefix_mode == PrefixMode::resume &&
            u == static_cast<int>(prefix.size()))
            prefix_live = false;
        std::uint64_t forced = 0;
        if (prefix_live && u < static_cast<int>(prefix.size())) forced = prefix[u];
        dfs_pick(u, u + 1, k - deg[u], forced);
    }

    void dfs_pick(int u, int from, int need, std::uint64_t forced) {
        if (aborted || stop_requested) return;
        if (need == 0) {
            if (forced != 0) return;  // inconsistent prefix row
            if (row_feasible(u + 1)) dfs_row(u + 1);
            return;
        }
        bool follow = prefix_live && forced != 0;
        for (int x = from; n - x >= need; ++x) {
            if (follow) {
                // jump straight to the next forced neighbor
                int fx = __builtin_ctzll(forced);
                if (fx < x) return;  // malformed prefix
                x = fx;
            }
            if (deg[x] >= k) {
                if (follow) {
                    if (prefix_mode == PrefixMode::fixed) return;  // branch is dead
                    prefix_live = false;
                    follow = false;
                }
                continue;
            }
            ++nodes;
            long long gained = __builtin_popcountll(adj[u] & adj[x]);
            long long t = partial_tri + gained;
            if (pruned(t)) {
                if (follow) {
                    if (prefix_mode == PrefixMode::fixed) return;  // branch is dead
                    prefix_live = false;
                    follow = false;
                }
                continue;
            }
            adj[u] |= 1ULL << x;
            adj[x] |= 1ULL << u;
            ++deg[u];
            ++deg[x];
            partial_tri = t;
            dfs_pick(u, x + 1, need - 1, follow ? (forced & (forced - 1)) : 0);
            partial_tri -= gained;
            --deg[x];
            --deg[u];
            adj[u] &= ~(1ULL << x);
            adj[x] &= ~(1ULL << u);
            if (aborted || stop_requested) return;
            if (follow) {
                if (prefix_mode == PrefixMode::fixed) return;  // fixed prefix: one branch only
                // resume: the forced subtree is done (or was cut short);
                // everything from here on is plain lexicographic enumeration
                prefix_live = false;
                follow = false;
            }
        }
    }
};

void check_enumeration_feasible(int n, int k) {
    if (n <= 0 || n > kEnumMaxVertices)
        throw std::invalid_argument("enumeration supports 1 <= n <= 64");
    if (k < 0 || k >= n || (static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("infeasible (n,k): need k < n and n*k even");
}

std::vector<std::uint64_t> first_row_masks(int n, int k) {
    std::vector<std::uint64_t> out;
    std::vector<int> pick;
    // k-subsets of {1,...,n-1} in lexicographic order
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == k) {
            std::uint64_t m = 0;
            for (int v : pick) m |= 1ULL << v;
            out.push_back(m);
            return;
        }
        int need = k - static_cast<int>(pick.size());
        for (int x = from; n - x >= need; ++x) {
            pick.push_back(x);
            rec(x + 1);
            pick.pop_back();
        }
    };
    rec(1);
    return out;
}

nlohmann::json checkpoint_to_json(int n, int k, const EnumEngine& eng, long long incumbent,
                                  const std::string& best_g6) {
    nlohmann::json j;
    j["n"] = n;
    j["k"] = k;
    j["rows"] = eng.abort_path;
    j["incumbent"] = incumbent;
    j["best_graph6"] = best_g6;
    j["nodes"] = eng.nodes;
    j["leaves"] = eng.leaves;
    return j;
}

}  // namespace

long long enumerate_regular(int n, int k, const std::function<void(const Graph&)>& visitor) {
    check_enumeration_feasible(n, k);
    EnumEngine eng;
    eng.n = n;
    eng.k = k;
    eng.on_leaf = [&](EnumEngine& e) {
        if (visitor) visitor(e.materialize());
    };
    eng.run();
    return eng.leaves;
}

SearchReport exhaustive_minimum(int n, int k, const ExhaustiveOptions& opts) {
    check_enumeration_feasible(n, k);
    if (opts.node_budget > 0 && opts.threads > 1)
        throw std::invalid_argument("node budget requires single-threaded search");

    SearchReport rep;
    rep.n = n;
    rep.k = k;
    rep.mode = "exhaustive";
    rep.formula_valid = check_params(n, k) == ParamError::ok;
    if (rep.formula_valid) rep.formula_value = formula_t(ExtremalParams{n, k});

    std::atomic<long long> incumbent{LLONG_MAX};
    std::string best_g6;
    long long total_nodes = 0;
    bool aborted = false;
    std::string checkpoint;

    if (opts.threads <= 1) {
        EnumEngine eng;
        eng.n = n;
        eng.k = k;
        eng.use_bound = true;
        eng.strict = true;
        eng.shared_bound = &incumbent;
        eng.budget = opts.node_budget;
        if (!opts.resume_checkpoint.empty()) {
            auto j = nlohmann::json::parse(opts.resume_checkpoint);
            if (j.at("n").get<int>() != n || j.at("k").get<int>() != k)
                throw std::invalid_argument("checkpoint does not match (n,k)");
            eng.prefix = j.at("rows").get<std::vector<std::uint64_t>>();
            if (eng.prefix.size() > static_cast<std::size_t>(n))
                throw std::invalid_argument("checkpoint prefix longer than the row count");
            for (std::size_t u = 0; u < eng.prefix.size(); ++u) {
                std::uint64_t allowed =
                    (n >= 64 ? ~0ULL : (1ULL << n) - 1) & ~((2ULL << u) - 1);
                if (eng.prefix[u] & ~allowed)
                    throw std::invalid_argument("checkpoint row has out-of-range bits");
            }
            eng.prefix_mode = EnumEngine::PrefixMode::resume;
            incumbent.store(j.at("incumbent").get<long long>());
            best_g6 = j.value("best_graph6", std::string());
            eng.nodes = j.at("nodes").get<long long>();
            eng.leaves = j.at("leaves").get<long long>();
        }
        eng.on_leaf = [&](EnumEngine& e) {
            long long t = e.partial_tri;
            long long cur = incumbent.load(std::memory_order_relaxed);
            if (t < cur) {
                incumbent.store(t, std::memory_order_relaxed);
                best_g6 = emit_graph6(e.materialize());
            }
        };
        eng.run();
        total_nodes = eng.nodes;
        if (eng.aborted) {
            aborted = true;
            checkpoint =
                checkpoint_to_json(n, k, eng, incumbent.load(), best_g6).dump();
        }
    } else {
        auto branches = first_row_masks(n, k);
        std::atomic<std::size_t> next{0};
        std::atomic<long long> nodes_sum{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= branches.size()) return;
                EnumEngine eng;
                eng.n = n;
                eng.k = k;
                eng.use_bound = true;
                eng.strict = true;
                eng.shared_bound = &incumbent;
                eng.prefix = {branches[b]};
                eng.prefix_mode = EnumEngine::PrefixMode::fixed;
                eng.on_leaf = [&](EnumEngine& e) {
                    long long t = e.partial_tri;
                    long long cur = incumbent.load(std::memory_order_relaxed);
                    while (t < cur &&
                           !incumbent.compare_exchange_weak(cur, t, std::memory_order_relaxed)) {
                    }
                };
                eng.run();
                nodes_sum.fetch_add(eng.nodes, std::memory_order_relaxed);
            }
        };
        std::vector<std::thread> pool;
        const int workers = std::max(1, std::min<int>(opts.threads, static_cast<int>(branches.size())));
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        total_nodes = nodes_sum.load();
    }

    rep.best_count = incumbent.load();
    rep.evaluations = total_nodes;
    rep.exact = !aborted;
    rep.budget_exhausted = aborted;
    rep.checkpoint_json = checkpoint;

    if (!aborted && rep.best_count != LLONG_MAX) {
        // Deterministic witness: lexicographically first minimizer.
        EnumEngine eng;
        eng.n = n;
        eng.k = k;
        eng.use_bound = true;
        eng.strict = false;  // keep leaves equal to the minimum
        eng.local_bound = rep.best_count;
        eng.on_leaf = [&](EnumEngine& e) {
            best_g6 = emit_graph6(e.materialize());
            e.stop_requested = true;
        };
        eng.run();
    }
    rep.best_graph6 = best_g6;

    if (rep.formula_valid && rep.best_count != LLONG_MAX) {
        rep.gap = rep.best_count - rep.formula_value;
        if (rep.gap < 0) {
            std::string path =
                opts.results_path.empty() ? "regtri_counterexamples.g6" : opts.results_path;
            append_graph6_line(path, rep.best_graph6);
            rep.counterexample = true;
        }
    }
    if (!opts.results_path.empty() && !rep.counterexample && !rep.best_graph6.empty())
        append_graph6_line(opts.results_path, rep.best_graph6);
    return rep;
}

ApexCheck extremal_membership_check(const Graph& g, int k) {
    ApexCheck c;
    c.k_regular = g.is_regular(k);
    TriangleCensus census = count_triangles(g);
    if (census.total == 0) return c;  // not applicable
    c.applicable = true;
    const int n = g.vertex_count();
    int found = 0, apex = -1;
    for (int v = 0; v < n; ++v) {
        if (census.per_vertex[static_cast<std::size_t>(v)] != census.total) continue;
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(n) - 1);
        for (int w = 0; w < n; ++w)
            if (w != v) rest.push_back(w);
        if (is_bipartite(induced(g, rest)).bipartite) {
            ++found;
            if (apex < 0) apex = v;
        }
    }
    c.apex_exists = found >= 1;
    c.apex_unique = found == 1;
    c.apex = apex;
    c.deletion_bipartite = found >= 1;
    return c;
}

ConjecturePointReport verify_conjecture_point(int n, int k, const std::string& mode,
                                              const SearchConfig& cfg, long long minimizer_cap) {
    ConjecturePointReport rep;
    rep.n = n;
    rep.k = k;
    ParamError pe = check_params(n, k);
    rep.in_theorem_range = pe == ParamError::ok;
    if (!rep.in_theorem_range)
        rep.range_note = std::string("out of theorem range: ") + param_error_name(pe);

    std::string chosen = mode;
    if (chosen == "auto") chosen = (n <= 10 || k <= 2) ? "exhaustive" : "anneal";

    if (chosen == "exhaustive") {
        rep.mode_used = "exhaustive";
        ExhaustiveOptions opts;
        opts.threads = cfg.threads;
        opts.results_path = cfg.results_path;
        rep.search = exhaustive_minimum(n, k, opts);

        // Re-enumerate every minimizer and audit the extremal-membership
        // necessary conditions on each.
        const long long target = rep.search.best_count;
        if (rep.search.exact && target != LLONG_MAX && target > 0) {
            std::atomic<long long> checked{0}, with_apex{0}, with_unique{0}, with_bip{0};
            std::atomic<bool> truncated{false};
            auto leaf_audit = [&](EnumEngine& e) {
                if (checked.fetch_add(1) >= minimizer_cap) {
                    truncated.store(true);
                    e.stop_requested = true;
                    return;
                }
                ApexCheck c = extremal_membership_check(e.materialize(), k);
                if (c.apex_exists) with_apex.fetch_add(1);
                if (c.apex_unique) with_unique.fetch_add(1);
                if (c.deletion_bipartite) with_bip.fetch_add(1);
            };
            if (cfg.threads <= 1) {
                EnumEngine eng;
                eng.n = n;
                eng.k = k;
                eng.use_bound = true;
                eng.strict = false;
                eng.local_bound = target;
                eng.on_leaf = leaf_audit;
                eng.run();
            } else {
                auto branches = first_row_masks(n, k);
                std::atomic<std::size_t> next{0};
                auto worker = [&]() {
                    for (;;) {
                        std::size_t b = next.fetch_add(1);
                        if (b >= branches.size() || truncated.load()) return;
                        EnumEngine eng;
                        eng.n = n;
                        eng.k = k;
                        eng.use_bound = true;
                        eng.strict = false;
                        eng.local_bound = target;
                        eng.prefix = {branches[b]};
                        eng.prefix_mode = EnumEngine::PrefixMode::fixed;
                        eng.on_leaf = leaf_audit;
                        eng.run();
                    }
                };
                std::vector<std::thread> pool;
                const int workers =
                    std::max(1, std::min<int>(cfg.threads, static_cast<int>(branches.size())));
                for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
                for (auto& t : pool) t.join();
            }
            rep.minimizers_checked = std::min(checked.load(), minimizer_cap);
            rep.minimizers_truncated = truncated.load();
            rep.minimizers_with_apex = with_apex.load();
            rep.minimizers_with_unique_apex = with_unique.load();
            rep.minimizers_apex_deletion_bipartite = with_bip.load();
        }
    } else if (chosen == "anneal") {
        rep.mode_used = "anneal";
        ExtremalParams p{n, k};
        rep.search = anneal_minimize(p, cfg);
        if (!rep.search.best_graph6.empty()) {
            ApexCheck c = extremal_membership_check(parse_graph6(rep.search.best_graph6), k);
            if (c.applicable) {
                rep.minimizers_checked = 1;
                rep.minimizers_with_apex = c.apex_exists ? 1 : 0;
                rep.minimizers_with_unique_apex = c.apex_unique ? 1 : 0;
                rep.minimizers_apex_deletion_bipartite = c.deletion_bipartite ? 1 : 0;
            }
        }
    } else {
        throw std::invalid_argument("unknown verify mode: " + mode);
    }
    return rep;
}

}  // namespace regtri
