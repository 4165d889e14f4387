#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "regtri/census.hpp"
#include "regtri/construct.hpp"
#include "regtri/graph6.hpp"
#include "regtri/minimize.hpp"
#include "regtri/prooflab.hpp"
#include "regtri/reports.hpp"

namespace {

constexpr const char* kVersion = "regtri 0.1.0";

// Exit codes: 0 success, 1 usage, 2 validation, 3 I/O, 4 counterexample-found.
enum ExitCode { exit_ok = 0, exit_usage = 1, exit_validation = 2, exit_io = 3, exit_counterexample = 4 };

using regtri::json;

int thread_cap_from_env() {
    const char* env = std::getenv("REGTRI_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 0;
}

int resolve_threads(int requested) {
    int t = requested;
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    int cap = thread_cap_from_env();
    if (cap > 0) t = std::min(t, cap);
    return t;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct Manifest {
    std::string path;
    json body;

    void begin(const std::string& command, json params, std::uint64_t seed) {
        body["command"] = command;
        body["params"] = std::move(params);
        body["seed"] = seed;
        body["version"] = kVersion;
        body["start"] = iso_timestamp();
        body["outputs"] = json::array();
    }
    void add_output(const std::string& p) {
        if (!p.empty()) body["outputs"].push_back(p);
    }
    void finish() {
        if (path.empty()) return;
        body["end"] = iso_timestamp();
        std::ofstream out(path);
        if (!out) throw std::ios_base::failure("cannot write manifest: " + path);
        out << body.dump(2) << "\n";
    }
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
    out << text;
}

std::string read_first_line(const std::string& path) {
    std::string line;
    if (path == "-") {
        if (!std::getline(std::cin, line)) throw std::ios_base::failure("empty stdin");
        return line;
    }
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open: " + path);
    if (!std::getline(in, line)) throw std::ios_base::failure("empty file: " + path);
    return line;
}

std::string read_whole_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_json(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_text_file(out_path, j.dump(2) + "\n");
    }
}

// Optional JSON config mirroring the long flag names; explicit flags win.
json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    return json::parse(read_whole_file(path));
}

template <typename T>
void config_fill(const CLI::App* cmd, const json& cfg, const std::string& flag, T& value) {
    if (cmd->count("--" + flag) == 0 && cfg.contains(flag)) value = cfg.at(flag).get<T>();
}

// ---------------------------------------------------------------------------

int run_construct(long long n, long long k, const std::string& factor_mode, std::uint64_t seed,
                  const std::string& out_path, const std::string& dot_path,
                  const std::string& json_path, Manifest& manifest) {
    regtri::ExtremalParams params;
    try {
        params = regtri::validate_params(n, k);
    } catch (const regtri::ParamValidationError& e) {
        json err{{"error", "validation"}, {"code", regtri::param_error_name(e.code)}, {"what", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_validation;
    }

    regtri::FactorSpec f1 = factor_mode == "random"
                                ? regtri::FactorSpec::random(static_cast<int>(params.k / 2),
                                                             static_cast<int>(params.r1()), seed)
                                : regtri::FactorSpec::circulant(static_cast<int>(params.k / 2),
                                                                static_cast<int>(params.r1()));
    regtri::FactorSpec f2 =
        factor_mode == "random"
            ? regtri::FactorSpec::random(static_cast<int>(params.half() - params.k / 2),
                                         static_cast<int>(params.r2()), seed ^ 0x517cc1b727220a95ULL)
            : regtri::FactorSpec::circulant(static_cast<int>(params.half() - params.k / 2),
                                            static_cast<int>(params.r2()));

    regtri::Graph g = regtri::build_extremal(params, f1, f2);
    regtri::TriangleCensus census = regtri::count_triangles(g);
    const int apex = regtri::apex_vertex(params);
    const long long apex_edge = (3 * params.k - params.n - 1) / 2;
    for (int w : g.neighbors(apex)) {
        if (census.edge_triangles(apex, w) != apex_edge)
            throw std::logic_error("apex edge census mismatch");
    }

    std::string g6 = regtri::emit_graph6(g);
    json summary{{"n", params.n},
                 {"k", params.k},
                 {"triangles", census.total},
                 {"formula", regtri::formula_t(params)},
                 {"apex_edge_triangles", apex_edge},
                 {"apex", apex},
                 {"r1", params.r1()},
                 {"r2", params.r2()},
                 {"factor1", regtri::to_json(f1)},
                 {"factor2", regtri::to_json(f2)},
                 {"graph6", g6}};
    if (!out_path.empty()) {
        write_text_file(out_path, g6 + "\n");
        manifest.add_output(out_path);
    }
    if (!dot_path.empty()) {
        write_text_file(dot_path, regtri::to_dot(g));
        manifest.add_output(dot_path);
    }
    emit_json(summary, json_path);
    manifest.add_output(json_path);
    return exit_ok;
}

int run_census(const std::string& in_path, int k, const std::string& dot_path,
               const std::string& json_path, Manifest& manifest) {
    regtri::Graph g = regtri::parse_graph6(read_first_line(in_path));
    if (!g.is_regular(k)) {
        json err{{"error", "validation"},
                 {"code", "regularity"},
                 {"what", "input graph is not " + std::to_string(k) + "-regular"}};
        std::cerr << err.dump() << "\n";
        return exit_validation;
    }

    regtri::HeavyDecomposition d = regtri::heavy_decompose(g, k);
    bool hypothesis = false;
    if (regtri::check_params(g.vertex_count(), k) == regtri::ParamError::ok) {
        long long formula = regtri::formula_t(regtri::ExtremalParams{g.vertex_count(), k});
        hypothesis = regtri::count_triangles(g).total <= formula;
    }
    auto recipe = regtri::bipartization_recipe(g, d, hypothesis);
    auto tf_check = regtri::check_gprime_triangle_free(d);
    auto c5_check = regtri::check_gprime_minus_u_c5_free(d);

    json rep = regtri::census_report_json(g, d, recipe, c5_check, tf_check.triangle_free);
    if (g.vertex_count() <= 26) {
        rep["exact_bipartization"] = regtri::exact_bipartization(g);
    } else {
        rep["heuristic_bipartization"] = regtri::heuristic_bipartization(g, 1);
        rep["heuristic_bipartization_exact"] = false;
    }
    if (!dot_path.empty()) {
        write_text_file(dot_path, regtri::to_dot(g));
        manifest.add_output(dot_path);
    }
    emit_json(rep, json_path);
    manifest.add_output(json_path);
    return exit_ok;
}

int run_minimize(int n, int k, const std::string& mode, regtri::SearchConfig cfg,
                 long long budget, const std::string& resume_path,
                 const std::string& checkpoint_out, bool verify, const std::string& json_path,
                 Manifest& manifest) {
    json rep;
    bool counterexample = false;
    if (mode == "exhaustive") {
        regtri::ExhaustiveOptions opts;
        opts.node_budget = budget;
        opts.threads = budget > 0 ? 1 : cfg.threads;
        opts.results_path = cfg.results_path;
        if (!resume_path.empty()) opts.resume_checkpoint = read_whole_file(resume_path);
        regtri::SearchReport sr = regtri::exhaustive_minimum(n, k, opts);
        counterexample = sr.counterexample;
        if (!sr.checkpoint_json.empty() && !checkpoint_out.empty()) {
            write_text_file(checkpoint_out, sr.checkpoint_json + "\n");
            manifest.add_output(checkpoint_out);
        }
        rep = regtri::to_json(sr);
        if (verify && sr.exact) {
            auto vr = regtri::verify_conjecture_point(n, k, "exhaustive", cfg);
            rep["verify"] = regtri::to_json(vr);
        }
    } else if (mode == "anneal") {
        regtri::ExtremalParams p{n, k};
        regtri::SearchReport sr = regtri::anneal_minimize(p, cfg);
        counterexample = sr.counterexample;
        rep = regtri::to_json(sr);
        if (verify) {
            auto check = regtri::extremal_membership_check(regtri::parse_graph6(sr.best_graph6), k);
            rep["best_apex_check"] = json{{"applicable", check.applicable},
                                          {"apex_exists", check.apex_exists},
                                          {"apex_unique", check.apex_unique},
                                          {"deletion_bipartite", check.deletion_bipartite}};
        }
    } else {
        std::cerr << "unknown mode: " << mode << "\n";
        return exit_usage;
    }
    emit_json(rep, json_path);
    manifest.add_output(json_path);
    return counterexample ? exit_counterexample : exit_ok;
}

int run_audit(const std::string& suite, int r, long long e, int n_cap, int graphs, int n, int k,
              std::uint64_t seed, const std::string& in_path, const std::string& json_path,
              Manifest& manifest) {
    std::ostringstream lines;
    bool assert_failed = false;

    if (suite == "phi") {
        regtri::PhiAudit a = regtri::audit_lemma_phi(r, e, n_cap);
        json line = regtri::audit_line(
            "phi", json{{"r", r}, {"e", e}, {"n_cap", n_cap}}, a.holds,
            a.bound - regtri::Rat(a.phi_max), a.witness_graph6);
        line["detail"] = regtri::to_json(a);
        lines << line.dump() << "\n";
    } else if (suite == "partition" || suite == "identity") {
        for (int i = 0; i < graphs; ++i) {
            std::uint64_t gseed = regtri::Rng::split(seed, static_cast<std::uint64_t>(i)).next();
            regtri::Graph g = regtri::random_regular(n, k, gseed);
            json params{{"n", n}, {"k", k}, {"seed", gseed}};
            if (suite == "partition") {
                regtri::Rng prng = regtri::Rng::split(seed, 1000000 + static_cast<std::uint64_t>(i));
                std::vector<std::int8_t> side(static_cast<std::size_t>(n));
                for (auto& s : side) s = static_cast<std::int8_t>(prng.below(2));
                auto a = regtri::audit_partition_inequality(g, k, side);
                bool holds = a.pointwise_holds && a.aggregate_holds;
                assert_failed |= !holds;
                json line = regtri::audit_line(
                    "partition", params, holds,
                    regtri::Rat(std::min(a.pointwise_min_slack, a.aggregate_slack)),
                    holds ? "" : regtri::emit_graph6(g));
                line["detail"] = regtri::to_json(a);
                lines << line.dump() << "\n";
            } else {
                auto a = regtri::audit_triangle_identity(g, k);
                assert_failed |= !a.holds;
                json line = regtri::audit_line("identity", params, a.holds,
                                               regtri::Rat(a.min_inequality_slack),
                                               a.holds ? "" : regtri::emit_graph6(g));
                line["detail"] = regtri::to_json(a);
                lines << line.dump() << "\n";
            }
        }
    } else if (suite == "c5") {
        std::vector<regtri::Graph> pool;
        if (!in_path.empty()) {
            pool.push_back(regtri::parse_graph6(read_first_line(in_path)));
        } else {
            for (int i = 0; i < graphs; ++i)
                pool.push_back(regtri::random_regular(
                    n, k, regtri::Rng::split(seed, static_cast<std::uint64_t>(i)).next()));
        }
        for (const auto& g : pool) {
            auto d = regtri::heavy_decompose(g, k);
            std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
            for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
            auto c5 = regtri::find_c5(d.g_prime, all);
            if (!c5) {
                lines << json{{"audit", "c5"},
                              {"params", json{{"n", g.vertex_count()}, {"k", k}}},
                              {"holds", true},
                              {"note", "no witness: G' is C5-free"}}
                             .dump()
                      << "\n";
                continue;
            }
            auto a = regtri::audit_c5_structure(d, *c5);
            assert_failed |= !a.n_disjoint;
            json line = regtri::audit_line("c5", json{{"n", g.vertex_count()}, {"k", k}},
                                           a.n_disjoint, a.min_window_slack(),
                                           a.n_disjoint ? "" : regtri::emit_graph6(g));
            line["detail"] = regtri::to_json(a);
            lines << line.dump() << "\n";
        }
    } else {
        std::cerr << "unknown audit suite: " << suite << "\n";
        return exit_usage;
    }

    if (json_path.empty()) {
        std::cout << lines.str();
    } else {
        write_text_file(json_path, lines.str());
        manifest.add_output(json_path);
    }
    return assert_failed ? exit_validation : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle minimization toolkit for k-regular graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // --config/--manifest may follow the subcommand

    std::string config_path, manifest_path;
    app.add_option("--config", config_path, "JSON config mirroring flags (flags win)");
    app.add_option("--manifest", manifest_path, "write a reproducibility manifest here");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build an extremal family member");
    long long c_n = 0, c_k = 0;
    std::string c_factor_mode = "circulant", c_out, c_dot, c_json;
    std::uint64_t c_seed = 1;
    c_cmd->add_option("n", c_n, "vertex count (odd)")->required();
    c_cmd->add_option("k", c_k, "regularity (even)")->required();
    c_cmd->add_option("--factor-mode", c_factor_mode, "circulant|random")
        ->check(CLI::IsMember({"circulant", "random"}));
    c_cmd->add_option("--seed", c_seed, "seed for random factors");
    c_cmd->add_option("--out", c_out, "write graph6 line here");
    c_cmd->add_option("--dot", c_dot, "write DOT here");
    c_cmd->add_option("--json", c_json, "write JSON summary here (default stdout)");

    // census
    auto* s_cmd = app.add_subcommand("census", "triangle census + heavy decomposition report");
    std::string s_in, s_dot, s_json;
    int s_k = 0;
    s_cmd->add_option("--in", s_in, "graph6 file ('-' for stdin)")->required();
    s_cmd->add_option("--k", s_k, "expected regularity")->required();
    s_cmd->add_option("--dot", s_dot, "write DOT here");
    s_cmd->add_option("--json", s_json, "write JSON here (default stdout)");

    // minimize
    auto* m_cmd = app.add_subcommand("minimize", "search for the minimum triangle count");
    int m_n = 0, m_k = 0, m_restarts = 20, m_threads = 0;
    long long m_steps = 100000, m_budget = 0;
    std::uint64_t m_seed = 1;
    std::string m_mode, m_out, m_results, m_resume, m_checkpoint_out, m_seed_mode = "random";
    double m_t0 = -1.0, m_decay = 0.999, m_floor = 1e-3;
    bool m_verify = false;
    m_cmd->add_option("n", m_n, "vertex count")->required();
    m_cmd->add_option("k", m_k, "regularity")->required();
    m_cmd->add_option("--mode", m_mode, "exhaustive|anneal")
        ->required()
        ->check(CLI::IsMember({"exhaustive", "anneal"}));
    m_cmd->add_option("--budget", m_budget, "node budget for exhaustive (0 = unlimited)");
    m_cmd->add_option("--seed", m_seed, "master seed");
    m_cmd->add_option("--restarts", m_restarts, "annealing restarts");
    m_cmd->add_option("--steps", m_steps, "steps per restart");
    m_cmd->add_option("--t0", m_t0, "initial temperature (default k)");
    m_cmd->add_option("--decay", m_decay, "per-step temperature decay");
    m_cmd->add_option("--floor", m_floor, "temperature floor");
    m_cmd->add_option("--seed-mode", m_seed_mode, "random|extremal start graphs")
        ->check(CLI::IsMember({"random", "extremal"}));
    m_cmd->add_option("--threads", m_threads, "worker threads (0 = auto, capped by REGTRI_THREADS)");
    m_cmd->add_option("--out", m_out, "write report JSON here (default stdout)");
    m_cmd->add_option("--results", m_results, "append best graphs (graph6 lines) here");
    m_cmd->add_option("--resume", m_resume, "resume exhaustive run from checkpoint file");
    m_cmd->add_option("--checkpoint-out", m_checkpoint_out, "write checkpoint here on budget stop");
    m_cmd->add_flag("--verify", m_verify, "add extremal-membership checks to the report");

    // audit
    auto* a_cmd = app.add_subcommand("audit", "computational audits of the proof machinery");
    std::string a_suite, a_in, a_json;
    int a_r = 4, a_ncap = 10, a_graphs = 20, a_n = 15, a_k = 4;
    long long a_e = 4;
    std::uint64_t a_seed = 1;
    a_cmd->add_option("--suite", a_suite, "phi|partition|identity|c5")->required();
    a_cmd->add_option("--r", a_r, "phi: degree cap");
    a_cmd->add_option("--e", a_e, "phi: exact edge count");
    a_cmd->add_option("--n-cap", a_ncap, "phi: vertex cap for brute force");
    a_cmd->add_option("--graphs", a_graphs, "sampled graphs");
    a_cmd->add_option("--n", a_n, "vertex count for sampled graphs");
    a_cmd->add_option("--k", a_k, "regularity for sampled graphs");
    a_cmd->add_option("--seed", a_seed, "sampling seed");
    a_cmd->add_option("--in", a_in, "c5: graph6 input file");
    a_cmd->add_option("--json", a_json, "write JSON lines here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    Manifest manifest;
    manifest.path = manifest_path;
    try {
        json cfg = load_config(config_path);
        if (c_cmd->parsed()) {
            config_fill(c_cmd, cfg, "factor-mode", c_factor_mode);
            config_fill(c_cmd, cfg, "seed", c_seed);
            config_fill(c_cmd, cfg, "out", c_out);
            manifest.begin("construct", json{{"n", c_n}, {"k", c_k}, {"factor_mode", c_factor_mode}},
                           c_seed);
            int rc = run_construct(c_n, c_k, c_factor_mode, c_seed, c_out, c_dot, c_json, manifest);
            manifest.finish();
            return rc;
        }
        if (s_cmd->parsed()) {
            manifest.begin("census", json{{"in", s_in}, {"k", s_k}}, 0);
            int rc = run_census(s_in, s_k, s_dot, s_json, manifest);
            manifest.finish();
            return rc;
        }
        if (m_cmd->parsed()) {
            config_fill(m_cmd, cfg, "seed", m_seed);
            config_fill(m_cmd, cfg, "restarts", m_restarts);
            config_fill(m_cmd, cfg, "steps", m_steps);
            config_fill(m_cmd, cfg, "threads", m_threads);
            regtri::SearchConfig scfg;
            scfg.seed = m_seed;
            scfg.restarts = m_restarts;
            scfg.steps_per_restart = m_steps;
            scfg.t0 = m_t0;
            scfg.decay = m_decay;
            scfg.temp_floor = m_floor;
            scfg.seed_mode = m_seed_mode == "extremal" ? regtri::SearchConfig::SeedMode::extremal
                                                       : regtri::SearchConfig::SeedMode::random_graph;
            scfg.threads = resolve_threads(m_threads);
            scfg.results_path = m_results;
            manifest.begin("minimize",
                           json{{"n", m_n},
                                {"k", m_k},
                                {"mode", m_mode},
                                {"budget", m_budget},
                                {"restarts", m_restarts},
                                {"steps", m_steps},
                                {"threads", scfg.threads}},
                           m_seed);
            int rc = run_minimize(m_n, m_k, m_mode, scfg, m_budget, m_resume, m_checkpoint_out,
                                  m_verify, m_out, manifest);
            manifest.finish();
            return rc;
        }
        if (a_cmd->parsed()) {
            config_fill(a_cmd, cfg, "graphs", a_graphs);
            config_fill(a_cmd, cfg, "seed", a_seed);
            manifest.begin("audit",
                           json{{"suite", a_suite},
                                {"r", a_r},
                                {"e", a_e},
                                {"n_cap", a_ncap},
                                {"graphs", a_graphs},
                                {"n", a_n},
                                {"k", a_k}},
                           a_seed);
            int rc = run_audit(a_suite, a_r, a_e, a_ncap, a_graphs, a_n, a_k, a_seed, a_in, a_json,
                               manifest);
            manifest.finish();
            return rc;
        }
    } catch (const regtri::ParamValidationError& e) {
        std::cerr << json{{"error", "validation"},
                          {"code", regtri::param_error_name(e.code)},
                          {"what", e.what()}}
                         .dump()
                  << "\n";
        return exit_validation;
    } catch (const regtri::Graph6Error& e) {
        std::cerr << json{{"error", "parse"}, {"offset", e.offset}, {"what", e.what()}}.dump()
                  << "\n";
        return exit_validation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << json{{"error", "io"}, {"what", e.what()}}.dump() << "\n";
        return exit_io;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << json{{"error", "validation"}, {"what", e.what()}}.dump() << "\n";
        return exit_validation;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "validation"}, {"what", e.what()}}.dump() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"what", e.what()}}.dump() << "\n";
        return exit_validation;
    }
    return exit_usage;
}
