#pragma once

#include <json.hpp>

#include "regtri/census.hpp"
#include "regtri/construct.hpp"
#include "regtri/graph.hpp"
#include "regtri/minimize.hpp"
#include "regtri/prooflab.hpp"

namespace regtri {

using json = nlohmann::json;

inline json to_json(const Rat& r) { return json{{"num", r.num}, {"den", r.den}}; }

inline json to_json(const SearchReport& r) {
    json j{{"n", r.n},
           {"k", r.k},
           {"mode", r.mode},
           {"best_count", r.best_count},
           {"best_graph6", r.best_graph6},
           {"evaluations", r.evaluations},
           {"seed", r.seed},
           {"exact", r.exact},
           {"counterexample", r.counterexample},
           {"budget_exhausted", r.budget_exhausted}};
    if (r.formula_valid) {
        j["formula"] = r.formula_value;
        j["gap"] = r.gap;
    } else {
        j["formula"] = nullptr;
        j["gap"] = nullptr;
    }
    if (!r.checkpoint_json.empty()) j["checkpoint"] = json::parse(r.checkpoint_json);
    return j;
}

inline json to_json(const ConjecturePointReport& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"in_theorem_range", r.in_theorem_range},
                {"range_note", r.range_note},
                {"mode_used", r.mode_used},
                {"search", to_json(r.search)},
                {"minimizers_checked", r.minimizers_checked},
                {"minimizers_truncated", r.minimizers_truncated},
                {"minimizers_with_apex", r.minimizers_with_apex},
                {"minimizers_with_unique_apex", r.minimizers_with_unique_apex},
                {"minimizers_apex_deletion_bipartite", r.minimizers_apex_deletion_bipartite}};
}

// The census command's flat report shape. The prop41/prop42 keys are the
// stable wire names for the two G'-structure checks (triangle-freeness after
// heavy-edge removal; C5-freeness of G' minus U).
inline json census_report_json(const Graph& g, const HeavyDecomposition& d,
                               const BipartizationReport& recipe, const C5FreeReport& c5_free,
                               bool gprime_triangle_free) {
    Rat mm = moon_moser_floor(g);
    return json{{"n", d.n},
                {"k", d.k},
                {"edges", g.edge_count()},
                {"triangles", count_triangles(g).total},
                {"threshold_num", d.threshold_num},
                {"heavy_count", d.heavy_edges.size()},
                {"u_size", d.u_set.size()},
                {"deletion_size", recipe.deletion_size},
                {"bound", recipe.bound},
                {"within_bound", recipe.within_bound},
                {"bipartite_after", recipe.bipartite_after},
                {"eh_bound_holds", recipe.eh_bound_holds},
                {"u_bound_holds", recipe.u_bound_holds},
                {"hypothesis_holds", recipe.hypothesis_holds},
                {"prop41", gprime_triangle_free},
                {"prop42", c5_free.holds},
                {"moon_moser_num", mm.num},
                {"moon_moser_den", mm.den}};
}

inline json to_json(const FactorSpec& s) {
    json j{{"m", s.m}, {"r", s.r}};
    if (s.mode == FactorSpec::Mode::circulant) {
        j["mode"] = "circulant";
        j["offsets"] = s.offsets;
    } else {
        j["mode"] = "random";
        j["seed"] = s.seed;
    }
    return j;
}

inline FactorSpec factor_spec_from_json(const json& j) {
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "circulant") {
        if (j.contains("offsets"))
            return FactorSpec::circulant(j.at("m").get<int>(), j.at("r").get<int>(),
                                         j.at("offsets").get<std::vector<int>>());
        return FactorSpec::circulant(j.at("m").get<int>(), j.at("r").get<int>());
    }
    if (mode == "random")
        return FactorSpec::random(j.at("m").get<int>(), j.at("r").get<int>(),
                                  j.at("seed").get<std::uint64_t>());
    throw std::invalid_argument("unknown factor mode: " + mode);
}

// Audit verdict line: {audit, params, holds, slack_num, slack_den, witness_graph6}
inline json audit_line(const std::string& audit, json params, bool holds, const Rat& slack,
                       const std::string& witness_g6) {
    return json{{"audit", audit},          {"params", std::move(params)},
                {"holds", holds},          {"slack_num", slack.num},
                {"slack_den", slack.den},  {"witness_graph6", witness_g6}};
}

inline json to_json(const PhiAudit& a) {
    return json{{"r", a.r},
                {"e", a.e},
                {"n_cap", a.n_cap},
                {"beta", to_json(a.beta)},
                {"phi_max", a.phi_max},
                {"bound", to_json(a.bound)},
                {"holds", a.holds},
                {"equality", a.equality},
                {"equality_structure", a.equality_structure},
                {"witness_graph6", a.witness_graph6},
                {"graphs_considered", a.graphs_considered}};
}

inline json to_json(const PartitionAudit& a) {
    return json{{"x_size", a.x_size},
                {"y_size", a.y_size},
                {"edges_in_x", a.edges_in_x},
                {"pointwise_holds", a.pointwise_holds},
                {"pointwise_min_slack", a.pointwise_min_slack},
                {"aggregate_holds", a.aggregate_holds},
                {"triangles", a.triangle_total},
                {"aggregate_rhs", a.aggregate_rhs},
                {"aggregate_slack", a.aggregate_slack}};
}

inline json to_json(const IdentityAudit& a) {
    json j{{"triangles_checked", a.triangles_checked},
           {"holds", a.holds},
           {"min_inequality_slack", a.min_inequality_slack}};
    if (a.witness) {
        j["witness"] = *a.witness;
        j["failed_identity"] = a.failed_identity;
    }
    return j;
}

inline json to_json(const C5StructureAudit& a) {
    return json{{"n", a.n},
                {"k", a.k},
                {"cycle", a.cycle},
                {"n_sizes", a.n_sizes},
                {"union_size", a.union_size},
                {"z_size", a.z_size},
                {"a_i", a.a_i},
                {"a", a.a},
                {"b_doubled", a.b_doubled},
                {"n_disjoint", a.n_disjoint},
                {"union_sum_holds", a.union_sum_holds},
                {"n_window_holds", a.n_window_holds},
                {"z_window_holds", a.z_window_holds},
                {"min_window_slack", to_json(a.min_window_slack())}};
}

}  // namespace regtri
