#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regtri/construct.hpp"
#include "regtri/graph.hpp"
#include "regtri/rng.hpp"

namespace regtri {

// Degree-preserving 2-switch chain with an incremental triangle count.
// Mutating steps touch only the four rows involved, so a proposal costs a
// handful of row intersections instead of a full census.
class SwitchChain {
public:
    SwitchChain(Graph g, Rng rng);

    const Graph& graph() const { return g_; }
    long long triangles() const { return triangles_; }
    long long evaluations() const { return evaluations_; }

    // One annealing proposal: sample a legal 2-switch, accept by the
    // Metropolis rule at `temp`. Returns true when a switch was applied.
    bool step(double temp);

    // Sample and apply one legal switch unconditionally (temp = infinity).
    bool force_step();

private:
    struct Proposal {
        int a, b, c, d;
        std::size_t ei, ej;
        long long delta;
    };

    std::optional<Proposal> propose_and_apply();
    void revert(const Proposal& p);

    Graph g_;
    std::vector<VertexPair> edges_;
    Rng rng_;
    long long triangles_ = 0;
    long long evaluations_ = 0;
};

// One random legal 2-switch applied to a copy of g; unchanged when no legal
// switch is found within the retry cap.
Graph switch_step(const Graph& g, Rng& rng, int retry_cap = 200);

struct SearchConfig {
    std::uint64_t seed = 1;
    int restarts = 20;
    long long steps_per_restart = 100000;
    double t0 = -1.0;  // negative: use k
    double decay = 0.999;
    double temp_floor = 1e-3;

    enum class SeedMode { random_graph, extremal, provided };
    SeedMode seed_mode = SeedMode::random_graph;
    std::optional<Graph> provided;

    int threads = 1;
    std::string results_path;  // append-only graph6 lines; counterexamples always persisted here

    void validate() const;  // throws on nonsensical values
};

struct SearchReport {
    int n = 0;
    int k = 0;
    std::string mode;
    long long best_count = -1;
    bool formula_valid = false;
    long long formula_value = 0;
    long long gap = 0;  // best - formula, meaningful when formula_valid
    std::string best_graph6;
    long long evaluations = 0;
    std::uint64_t seed = 0;
    bool exact = false;
    bool counterexample = false;  // exact-or-not: best below formula
    bool budget_exhausted = false;
    std::string checkpoint_json;  // set when budget_exhausted
};

SearchReport anneal_minimize(const ExtremalParams& params, const SearchConfig& cfg);

// Streams every labeled simple k-regular graph on n vertices exactly once.
// Backtracking over adjacency rows in lexicographic order with
// degree-feasibility pruning.
long long enumerate_regular(int n, int k, const std::function<void(const Graph&)>& visitor);

struct ExhaustiveOptions {
    long long node_budget = 0;       // 0 = unlimited; budget requires threads == 1
    int threads = 1;                 // parallel split over first-row choices
    std::string resume_checkpoint;   // JSON from a previous budget-exhausted run
    std::string results_path;        // counterexample persistence
};

// Exact minimum of T(G) over labeled k-regular graphs on n vertices, via the
// same backtracking with branch-and-bound on the partial triangle count.
SearchReport exhaustive_minimum(int n, int k, const ExhaustiveOptions& opts = {});

// Necessary conditions for membership in the extremal family: a unique apex
// on all triangles whose deletion leaves the graph bipartite.
struct ApexCheck {
    bool k_regular = false;
    bool applicable = false;  // T(G) > 0
    bool apex_exists = false;
    bool apex_unique = false;
    int apex = -1;
    bool deletion_bipartite = false;
};

ApexCheck extremal_membership_check(const Graph& g, int k);

struct ConjecturePointReport {
    int n = 0;
    int k = 0;
    bool in_theorem_range = false;
    std::string range_note;
    std::string mode_used;  // "exhaustive" or "anneal"
    SearchReport search;
    // exact mode: aggregate apex checks over every minimizer found
    long long minimizers_checked = 0;
    bool minimizers_truncated = false;
    long long minimizers_with_apex = 0;
    long long minimizers_with_unique_apex = 0;
    long long minimizers_apex_deletion_bipartite = 0;
};

ConjecturePointReport verify_conjecture_point(int n, int k, const std::string& mode,
                                              const SearchConfig& cfg,
                                              long long minimizer_cap = 200000);

void append_graph6_line(const std::string& path, const std::string& g6);

}  // namespace regtri
