// Command-line front end: generators, decomposition, partitioning,
// transversals, exact DP and EPTAS solvers, the brute-force oracle, the
// dp-vs-oracle selfcheck, and a stage benchmark. JSON (or the documented
// text formats) goes to stdout, human-readable notes to stderr.
//
// Exit codes: 0 success, 1 usage or input error, 2 infeasible instance or
// blown budget, 3 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eptas/dp.hpp"
#include "eptas/eptas.hpp"
#include "eptas/graph.hpp"
#include "eptas/oracle.hpp"
#include "eptas/partition.hpp"
#include "eptas/problems.hpp"
#include "eptas/transversal.hpp"
#include "eptas/treewidth.hpp"

using nlohmann::json;
using namespace eptas;

namespace {

struct BudgetExit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_instance(const std::string& path) {
    std::vector<std::string> warnings;
    Graph g;
    if (path == "-") {
        g = load_graph(std::cin, &warnings);
    } else {
        g = load_graph_file(path, &warnings);
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return g;
}

VertexSet read_vertex_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<Vertex> vs;
    long long v;
    while (in >> v) {
        if (v < 1 || v > g.num_vertices())
            throw ParseError("transversal vertex " + std::to_string(v) + " out of range");
        vs.push_back(static_cast<Vertex>(v - 1));
    }
    return VertexSet(std::move(vs));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
}

json witness_json(Problem p, const Solution& sol) {
    if (p == Problem::CyclePacking) {
        json cycles = json::array();
        for (const auto& cyc : sol.cycles) {
            json c = json::array();
            for (Vertex v : cyc) c.push_back(v + 1);
            cycles.push_back(c);
        }
        return cycles;
    }
    if (p == Problem::MaxLeaf) {
        json tree = json::array(), leaves = json::array();
        for (auto [u, v] : sol.tree) tree.push_back(json::array({u + 1, v + 1}));
        for (Vertex v : sol.leaves) leaves.push_back(v + 1);
        return json{{"tree_edges", tree}, {"leaves", leaves}};
    }
    json w = json::array();
    for (Vertex v : sol.witness) w.push_back(v + 1);
    return w;
}

Problem parse_problem(const std::string& s) {
    auto p = problem_from_string(s);
    if (!p) throw CLI::ValidationError("--problem", "unknown problem '" + s + "'");
    return *p;
}

AnnotatedTag tag_for_cli(Problem p) { return annotated_tag_of(p); }

int run(int argc, char** argv) {
    CLI::App app{"treewidth-modulator approximation toolkit for planar graphs"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->require_subcommand(1);
    int gen_r = 6, gen_n = 50;
    uint64_t gen_seed = 1;
    double keep_prob = 1.0;
    bool no_corner_join = false;
    std::string out_path;
    auto* gen_grid_cmd = gen->add_subcommand("grid", "r x r grid");
    gen_grid_cmd->add_option("--r", gen_r, "side length")->check(CLI::Range(2, 100000));
    gen_grid_cmd->add_option("-o,--output", out_path, "output file");
    auto* gen_gamma_cmd = gen->add_subcommand("gamma", "triangulated grid with corner join");
    gen_gamma_cmd->add_option("--r", gen_r, "side length")->check(CLI::Range(2, 100000));
    gen_gamma_cmd->add_flag("--no-corner-join", no_corner_join, "skip the corner join step");
    gen_gamma_cmd->add_option("-o,--output", out_path, "output file");
    auto* gen_planar_cmd = gen->add_subcommand("planar", "random stacked triangulation");
    gen_planar_cmd->add_option("--n", gen_n, "vertex count")->check(CLI::Range(3, 10000000));
    gen_planar_cmd->add_option("--seed", gen_seed, "rng seed");
    gen_planar_cmd->add_option("--keep-prob", keep_prob, "edge keep probability")
        ->check(CLI::Range(0.0, 1.0));
    gen_planar_cmd->add_option("-o,--output", out_path, "output file");

    // ---- decompose ----
    auto* dec = app.add_subcommand("decompose", "tree decomposition of an instance");
    std::string dec_file, dec_check;
    bool dec_exact = false;
    int dec_ub = 8;
    dec->add_option("file", dec_file, "instance file ('-' for stdin)")->required();
    dec->add_flag("--exact", dec_exact, "exact treewidth (small graphs)");
    dec->add_option("--ub", dec_ub, "exact-width budget");
    dec->add_option("--check-td", dec_check, "validate an external decomposition file instead");

    // ---- transversal ----
    auto* tr = app.add_subcommand("transversal", "problem-specific transversal");
    std::string tr_problem = "vc", tr_file;
    tr->add_option("--problem", tr_problem, "problem tag")->required();
    tr->add_option("file", tr_file, "instance file")->required();

    // ---- partition ----
    auto* part = app.add_subcommand("partition", "recursive modulator shrinking");
    std::string part_problem = "fvs", part_file, part_tfile;
    double part_epsilon = 0.5, part_lambda = 0.5, part_gamma = -1, part_beta = -1,
           part_rho_grid = 0.2;
    part->add_option("--problem", part_problem, "problem whose transversal supplies X");
    part->add_option("--transversal-file", part_tfile, "explicit X, one 1-based id per line");
    part->add_option("--epsilon", part_epsilon, "target shrink factor");
    part->add_option("--lambda", part_lambda, "sublinearity exponent");
    part->add_option("--gamma", part_gamma, "gamma override (>0)");
    part->add_option("--beta", part_beta, "beta override");
    part->add_option("--rho-grid", part_rho_grid, "grid-minor coefficient");
    part->add_option("file", part_file, "instance file")->required();

    // ---- solve-dp ----
    auto* sdp = app.add_subcommand("solve-dp", "exact dynamic programming solver");
    std::string sdp_problem, sdp_file, sdp_anchors;
    long long sdp_budget = -1;
    bool sdp_exact = false;
    sdp->add_option("--problem", sdp_problem, "problem tag")->required();
    sdp->add_option("--budget", sdp_budget, "edge budget (partial-vc)");
    sdp->add_option("--anchors-file", sdp_anchors, "annotation set R, one 1-based id per line");
    sdp->add_flag("--exact", sdp_exact, "solve on an exact decomposition");
    sdp->add_option("file", sdp_file, "instance file")->required();

    // ---- solve-eptas ----
    auto* sep = app.add_subcommand("solve-eptas", "approximation pipeline");
    std::string sep_problem, sep_file, sep_tfile;
    double sep_epsilon = 0.5, sep_gamma = -1, sep_lambda = 0.5, sep_beta = -1, sep_rho_grid = 0.2;
    int sep_eta = -1;
    bool sep_json_only = false;
    sep->add_option("--problem", sep_problem, "problem tag")->required();
    sep->add_option("--epsilon", sep_epsilon, "approximation parameter in (0,1]");
    sep->add_option("--gamma", sep_gamma, "gamma override (forfeits the guarantee)");
    sep->add_option("--eta", sep_eta, "width-target override");
    sep->add_option("--lambda", sep_lambda, "sublinearity exponent");
    sep->add_option("--beta", sep_beta, "beta override");
    sep->add_option("--rho-grid", sep_rho_grid, "grid-minor coefficient");
    sep->add_option("--transversal-file", sep_tfile, "user-supplied X (required for ds)");
    sep->add_flag("--json-only", sep_json_only, "suppress the stderr summary");
    sep->add_option("file", sep_file, "instance file")->required();

    // ---- oracle ----
    auto* orc = app.add_subcommand("oracle", "brute-force exact solver (n <= 16)");
    std::string orc_problem, orc_file;
    long long orc_budget = -1;
    orc->add_option("--problem", orc_problem, "problem tag")->required();
    orc->add_option("--budget", orc_budget, "edge budget (partial-vc)");
    orc->add_option("file", orc_file, "instance file")->required();

    // ---- selfcheck ----
    auto* sc = app.add_subcommand("selfcheck", "dp vs oracle on random instances");
    std::string sc_problem = "vc";
    int sc_n = 12, sc_trials = 100;
    uint64_t sc_seed = 42;
    sc->add_option("--problem", sc_problem, "problem tag")->required();
    sc->add_option("--n", sc_n, "max vertices")->check(CLI::Range(4, 16));
    sc->add_option("--trials", sc_trials, "number of trials");
    sc->add_option("--seed", sc_seed, "rng seed");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "stage timings as CSV");
    std::string bench_problem = "fvs";
    std::vector<int> bench_sizes = {100, 500, 2000};
    uint64_t bench_seed = 7;
    double bench_gamma = 20, bench_epsilon = 0.5;
    bool bench_kernels = false;
    bench->add_option("--problem", bench_problem, "problem tag");
    bench->add_option("--sizes", bench_sizes, "instance sizes");
    bench->add_option("--seed", bench_seed, "rng seed");
    bench->add_option("--gamma", bench_gamma, "gamma override");
    bench->add_option("--epsilon", bench_epsilon, "epsilon");
    bench->add_flag("--kernels", bench_kernels, "compare serial vs parallel oracle kernels");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        Graph g;
        if (gen_grid_cmd->parsed()) g = gen_grid(gen_r);
        if (gen_gamma_cmd->parsed()) g = gen_gamma(gen_r, !no_corner_join);
        if (gen_planar_cmd->parsed()) g = gen_stacked_planar(gen_n, gen_seed, keep_prob);
        std::ostringstream os;
        save_graph(os, g);
        emit(os.str(), out_path);
        std::cerr << "generated n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
        return 0;
    }

    if (dec->parsed()) {
        Graph g = read_instance(dec_file);
        if (!dec_check.empty()) {
            std::ifstream in(dec_check);
            if (!in) throw ParseError("cannot open '" + dec_check + "'");
            auto td = read_td(in);
            auto rep = validate_decomposition(g, td);
            json j;
            j["valid"] = rep.valid();
            j["width"] = td.width();
            json viols = json::array();
            for (const auto& v : rep.violations)
                viols.push_back({{"condition", v.condition}, {"witness", v.witness}});
            j["violations"] = viols;
            std::cout << j.dump(2) << "\n";
            return rep.valid() ? 0 : 2;
        }
        TreeDecomposition td;
        if (dec_exact) {
            auto res = exact_treewidth(g, dec_ub);
            if (res.status == ExactTwResult::Status::BudgetExceeded)
                throw BudgetExit("exact treewidth: search budget exceeded");
            if (res.status == ExactTwResult::Status::ExceedsUb)
                throw BudgetExit("exact treewidth exceeds ub " + std::to_string(dec_ub));
            td = res.td;
            std::cerr << "exact width " << res.width << " (" << res.nodes_explored
                      << " nodes explored)\n";
        } else {
            td = heuristic_decomposition(g);
            std::cerr << "heuristic width " << td.width() << "\n";
        }
        auto rep = validate_decomposition(g, td);
        if (!rep.valid()) throw std::logic_error("produced an invalid decomposition");
        std::ostringstream os;
        write_td(os, td, g.num_vertices());
        std::cout << os.str();
        return 0;
    }

    if (tr->parsed()) {
        Graph g = read_instance(tr_file);
        auto res = build_transversal(parse_problem(tr_problem), g);
        json j;
        j["problem"] = tr_problem;
        j["eta"] = res.eta;
        j["size"] = res.x.size();
        json xs = json::array();
        for (Vertex v : res.x) xs.push_back(v + 1);
        j["x"] = xs;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (part->parsed()) {
        Graph g = read_instance(part_file);
        VertexSet x;
        int eta = 1;
        if (!part_tfile.empty()) {
            x = read_vertex_file(part_tfile, g);
        } else {
            auto tres = build_transversal(parse_problem(part_problem), g);
            x = std::move(tres.x);
            eta = tres.eta;
        }
        double beta = part_beta > 0 ? part_beta : planar_beta(eta, part_rho_grid);
        auto constants = derive_constants(part_epsilon, part_lambda, beta, eta);
        double gamma = part_gamma > 0 ? part_gamma : constants.gamma;
        auto mod = bounded_tw_modulator(g, x, constants, gamma);
        json j;
        j["constants"] = {{"epsilon", constants.epsilon}, {"lambda", constants.lambda},
                          {"beta", constants.beta},       {"eta", constants.eta},
                          {"rho", constants.rho},         {"delta", constants.delta},
                          {"gamma", constants.gamma},     {"tau", constants.tau}};
        j["gamma_used"] = gamma;
        j["x_size"] = mod.report.x_size;
        j["xprime_size"] = mod.report.xprime_size;
        j["ratio"] = mod.report.ratio;
        j["recursion_depth"] = mod.report.recursion_depth;
        j["progress_guard_triggers"] = mod.report.progress_guard_triggers;
        j["base_case"] = mod.report.base_case;
        j["width_g_minus_x"] = mod.width_before;
        j["width_g_minus_xprime"] = mod.width_after;
        json comps = json::array();
        for (const auto& c : mod.report.components)
            comps.push_back({{"size", c.size},
                             {"x_overlap", c.x_overlap},
                             {"boundary", c.boundary},
                             {"heuristic_width", c.heuristic_width}});
        j["components"] = comps;
        json xp = json::array();
        for (Vertex v : mod.x_prime) xp.push_back(v + 1);
        j["xprime"] = xp;
        std::cout << j.dump(2) << "\n";
        std::cerr << "|X|=" << mod.report.x_size << " |X'|=" << mod.report.xprime_size
                  << " guard=" << mod.report.progress_guard_triggers << "\n";
        return 0;
    }

    if (sdp->parsed()) {
        Graph g = read_instance(sdp_file);
        Problem p = parse_problem(sdp_problem);
        VertexSet anchors;
        if (!sdp_anchors.empty()) anchors = read_vertex_file(sdp_anchors, g);
        std::optional<long long> budget;
        if (p == Problem::PartialVertexCover) {
            if (sdp_budget < 0) throw CLI::ValidationError("--budget", "partial-vc needs --budget");
            budget = sdp_budget;
        }
        auto inst = make_instance(tag_for_cli(p), g, anchors, budget);
        TreeDecomposition td;
        if (sdp_exact) {
            auto res = exact_treewidth(g, g.num_vertices());
            if (res.status != ExactTwResult::Status::Found)
                throw BudgetExit("exact treewidth budget exceeded");
            td = res.td;
        } else {
            td = heuristic_decomposition(g);
        }
        DpStats stats;
        Solution sol;
        try {
            sol = dp_solve(inst, make_nice(g, td), DpBudget{}, &stats);
        } catch (const WidthOverBudget& e) {
            throw BudgetExit(e.what());
        }
        if (sol.feasible && !check_annotated(inst, sol))
            throw std::logic_error("witness failed re-verification");
        json j;
        j["problem"] = to_string(inst.tag);
        j["n"] = g.num_vertices();
        j["m"] = g.num_edges();
        j["feasible"] = sol.feasible;
        j["objective"] = sol.objective;
        j["witness"] = witness_json(p, sol);
        j["width"] = stats.width;
        j["dp_states"] = stats.total_states;
        if (budget) j["budget"] = *budget;
        std::cout << j.dump(2) << "\n";
        return sol.feasible ? 0 : 2;
    }

    if (sep->parsed()) {
        Graph g = read_instance(sep_file);
        Problem p = parse_problem(sep_problem);
        EptasOptions opts;
        opts.lambda = sep_lambda;
        opts.rho_grid = sep_rho_grid;
        if (sep_beta > 0) opts.beta = sep_beta;
        if (sep_gamma > 0) opts.gamma = sep_gamma;
        if (sep_eta >= 0) opts.eta = sep_eta;
        if (!sep_tfile.empty()) opts.transversal = read_vertex_file(sep_tfile, g);
        EptasResult res;
        try {
            res = eptas_solve(p, g, sep_epsilon, opts);
        } catch (const WidthOverBudget& e) {
            throw BudgetExit(e.what());
        }
        if (res.solution.feasible && !check_plain(p, g, res.solution))
            throw std::logic_error("witness failed re-verification");
        json j;
        j["problem"] = to_string(p);
        j["n"] = g.num_vertices();
        j["m"] = g.num_edges();
        j["epsilon"] = res.epsilon;
        j["objective"] = res.solution.objective;
        j["feasible"] = res.solution.feasible;
        j["witness"] = witness_json(p, res.solution);
        j["stage_stats"] = {{"transversal_size", res.stats.transversal_size},
                            {"modulator_size", res.stats.modulator_size},
                            {"width", res.stats.width},
                            {"dp_states", res.stats.dp_states}};
        j["guarantee"] = res.guarantee;
        std::cout << j.dump(2) << "\n";
        if (!sep_json_only)
            std::cerr << "transversal " << res.stats.transversal_size << " -> modulator "
                      << res.stats.modulator_size << ", width " << res.stats.width << ", guard "
                      << res.stats.progress_guard_triggers << ", retries " << res.stats.retries
                      << "\n";
        return res.solution.feasible ? 0 : 2;
    }

    if (orc->parsed()) {
        Graph g = read_instance(orc_file);
        Problem p = parse_problem(orc_problem);
        std::optional<long long> budget;
        if (p == Problem::PartialVertexCover) {
            if (orc_budget < 0) throw CLI::ValidationError("--budget", "partial-vc needs --budget");
            budget = orc_budget;
        }
        Solution sol = oracle::brute_force(p, g, budget);
        json j;
        j["problem"] = to_string(p);
        j["n"] = g.num_vertices();
        j["m"] = g.num_edges();
        j["feasible"] = sol.feasible;
        j["objective"] = sol.objective;
        j["witness"] = witness_json(p, sol);
        std::cout << j.dump(2) << "\n";
        return sol.feasible ? 0 : 2;
    }

    if (sc->parsed()) {
        Problem p = parse_problem(sc_problem);
        auto rep = dp_selfcheck(tag_for_cli(p), sc_n, sc_trials, sc_seed);
        json j;
        j["problem"] = to_string(tag_for_cli(p));
        j["trials"] = rep.trials;
        j["mismatches"] = rep.mismatches;
        j["details"] = rep.details;
        std::cout << j.dump(2) << "\n";
        return rep.mismatches == 0 ? 0 : 3;
    }

    if (bench->parsed()) {
        std::cout << "instance,n,m,stage,millis,aux\n";
        if (bench_kernels) {
            for (int n : {14, 15, 16}) {
                Graph g = gen_stacked_planar(n, bench_seed, 1.0);
                auto inst = make_instance(AnnotatedTag::Vc, g);
                auto t0 = std::chrono::steady_clock::now();
                auto serial = oracle::brute_force_annotated_serial(inst);
                double ms_serial =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
                t0 = std::chrono::steady_clock::now();
                auto par = oracle::brute_force_annotated(inst);
                double ms_par =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
                if (serial.objective != par.objective || serial.witness != par.witness)
                    throw std::logic_error("kernel results diverge");
                std::string name = "planar-" + std::to_string(n);
                std::cout << name << "," << n << "," << g.num_edges() << ",oracle-serial,"
                          << ms_serial << ",obj=" << serial.objective << "\n";
                std::cout << name << "," << n << "," << g.num_edges() << ",oracle-parallel,"
                          << ms_par << ",obj=" << par.objective << "\n";
            }
            return 0;
        }
        Problem p = parse_problem(bench_problem);
        for (int n : bench_sizes) {
            Graph g = gen_stacked_planar(n, bench_seed, 1.0);
            EptasOptions opts;
            opts.gamma = bench_gamma;
            auto t0 = std::chrono::steady_clock::now();
            EptasResult res = eptas_solve(p, g, bench_epsilon, opts);
            double total =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            std::string name = "planar-" + std::to_string(n);
            auto row = [&](const std::string& stage, double ms, const std::string& aux) {
                std::cout << name << "," << n << "," << g.num_edges() << "," << stage << "," << ms
                          << "," << aux << "\n";
            };
            row("transversal", res.stats.t_transversal_ms,
                "size=" + std::to_string(res.stats.transversal_size));
            row("modulator", res.stats.t_modulator_ms,
                "size=" + std::to_string(res.stats.modulator_size));
            row("reduce", res.stats.t_reduce_ms, "");
            row("decompose", res.stats.t_decompose_ms, "width=" + std::to_string(res.stats.width));
            row("dp", res.stats.t_dp_ms, "states=" + std::to_string(res.stats.dp_states));
            row("lift", res.stats.t_lift_ms, "objective=" + std::to_string(res.solution.objective));
            row("total", total, "feasible=" + std::string(res.solution.feasible ? "1" : "0"));
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExit& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const WidthOverBudget& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
