#include "eptas/dp.hpp"

#include <algorithm>

#include "dp_common.hpp"
#include "eptas/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eptas {

namespace {

using dpimpl::RunResult;

struct Reconstruction {
    std::vector<Vertex> selected;
    std::vector<std::pair<Vertex, Vertex>> taken_edges;
};

Reconstruction reconstruct(const NiceTreeDecomposition& ntd, const RunResult& run, bool cp_family) {
    Reconstruction rec;
    std::vector<std::pair<int, int>> stack = {{ntd.root, run.root_entry}};
    while (!stack.empty()) {
        auto [node, ei] = stack.back();
        stack.pop_back();
        const auto& nd = ntd.nodes[node];
        const auto& entry = run.tables[node][ei].second;
        switch (nd.kind) {
            case NiceTreeDecomposition::NodeKind::Leaf:
                break;
            case NiceTreeDecomposition::NodeKind::Introduce:
                if (cp_family) {
                    for (size_t e = 0; e < nd.edges.size(); ++e)
                        if (entry.blob[e]) rec.taken_edges.push_back(nd.edges[e]);
                } else if (entry.blob[0]) {
                    rec.selected.push_back(nd.vertex);
                }
                stack.push_back({nd.left, entry.child1});
                break;
            case NiceTreeDecomposition::NodeKind::Forget:
                stack.push_back({nd.left, entry.child1});
                break;
            case NiceTreeDecomposition::NodeKind::Join:
                stack.push_back({nd.left, entry.child1});
                stack.push_back({nd.right, entry.child2});
                break;
        }
    }
    // a vertex can be introduced once per branch below a join
    std::sort(rec.selected.begin(), rec.selected.end());
    rec.selected.erase(std::unique(rec.selected.begin(), rec.selected.end()), rec.selected.end());
    return rec;
}

std::vector<std::vector<Vertex>> edges_to_cycles(const Graph& g,
                                                 const std::vector<std::pair<Vertex, Vertex>>& es) {
    std::vector<std::vector<Vertex>> adj(g.num_vertices());
    for (auto [u, v] : es) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<Vertex>> cycles;
    std::vector<char> seen(g.num_vertices(), 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (seen[s] || adj[s].empty()) continue;
        std::vector<Vertex> cyc = {s};
        seen[s] = 1;
        Vertex prev = -1, cur = s;
        for (;;) {
            Vertex nxt = (adj[cur][0] != prev || adj[cur].size() == 1) ? adj[cur][0] : adj[cur][1];
            if (nxt == s) break;
            cyc.push_back(nxt);
            seen[nxt] = 1;
            prev = cur;
            cur = nxt;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

}  // namespace

Solution dp_solve(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                  const DpBudget& budget, DpStats* stats) {
    long long assigned = 0;
    int maxv = -1;
    for (const auto& nd : ntd.nodes) {
        assigned += static_cast<long long>(nd.edges.size());
        for (Vertex v : nd.bag) maxv = std::max(maxv, v);
    }
    if (assigned != inst.graph.num_edges() || maxv >= inst.graph.num_vertices())
        throw std::invalid_argument("dp_solve: decomposition does not fit the instance");

    RunResult run;
    bool cp_family = false;
    switch (inst.tag) {
        case AnnotatedTag::Vc:
        case AnnotatedTag::DsAnnotated:
        case AnnotatedTag::PartialVc:
            if (inst.tag == AnnotatedTag::PartialVc && !inst.budget)
                throw std::invalid_argument("partial-vc needs a budget");
            run = dpimpl::run_subset(inst, ntd, budget);
            break;
        case AnnotatedTag::Fvs:
            run = dpimpl::run_forest(inst, ntd, budget);
            break;
        case AnnotatedTag::CvcAnnotated:
        case AnnotatedTag::MaxleafAnnotated:
            run = dpimpl::run_connectivity(inst, ntd, budget);
            break;
        case AnnotatedTag::CyclePacking:
            run = dpimpl::run_cyclepack(inst, ntd, budget);
            cp_family = true;
            break;
    }
    if (stats) {
        stats->peak_states = run.peak_states;
        stats->total_states = run.total_states;
        stats->width = ntd.width();
        stats->nodes = static_cast<int>(ntd.nodes.size());
    }

    Solution sol;
    sol.provenance = Provenance::Dp;
    if (!run.feasible) return sol;
    sol.feasible = true;

    auto rec = reconstruct(ntd, run, cp_family);
    switch (inst.tag) {
        case AnnotatedTag::Vc:
        case AnnotatedTag::DsAnnotated:
        case AnnotatedTag::PartialVc:
        case AnnotatedTag::CvcAnnotated:
        case AnnotatedTag::MaxleafAnnotated:
            sol.witness = rec.selected;
            sol.objective = static_cast<long long>(sol.witness.size());
            break;
        case AnnotatedTag::Fvs: {
            std::vector<char> in(inst.graph.num_vertices(), 0);
            for (Vertex v : rec.selected) in[v] = 1;
            for (Vertex v = 0; v < inst.graph.num_vertices(); ++v)
                if (!in[v]) sol.witness.push_back(v);
            sol.objective = static_cast<long long>(sol.witness.size());
            break;
        }
        case AnnotatedTag::CyclePacking:
            sol.cycles = edges_to_cycles(inst.graph, rec.taken_edges);
            sol.objective = static_cast<long long>(sol.cycles.size());
            break;
    }
    long long expect = inst.tag == AnnotatedTag::Fvs
                           ? inst.graph.num_vertices() - run.value
                           : run.value;
    if (sol.objective != expect || !check_annotated(inst, sol))
        throw std::logic_error("dp_solve: witness fails independent verification");
    return sol;
}

SelfcheckReport dp_selfcheck(AnnotatedTag tag, int size_cap, int trials, uint64_t seed) {
    if (size_cap > 16) throw std::invalid_argument("dp_selfcheck: size_cap <= 16");
    SelfcheckReport rep;
    rep.trials = trials;
    std::vector<std::string> details(trials);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
        int n = 4 + static_cast<int>(rng.below(std::max(1, size_cap - 3)));
        double kp = trial % 3 == 0 ? 1.0 : (trial % 3 == 1 ? 0.85 : 0.7);
        Graph g = gen_stacked_planar(n, rng.next(), kp);

        VertexSet anchors;
        if (tag == AnnotatedTag::CvcAnnotated || tag == AnnotatedTag::MaxleafAnnotated) {
            std::vector<Vertex> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            anchors = VertexSet(all);
        }
        std::optional<long long> budget;
        if (tag == AnnotatedTag::PartialVc) budget = static_cast<long long>(rng.below(g.num_edges() + 1));
        AnnotatedInstance inst = make_instance(tag, g, anchors, budget);

        std::string fail;
        try {
            auto exact = exact_treewidth(g, n);
            if (exact.status != ExactTwResult::Status::Found) {
                fail = "exact treewidth failed";
            } else {
                auto ntd = make_nice(g, exact.td);
                Solution dp = dp_solve(inst, ntd);
                Solution ref = oracle::brute_force_annotated(inst);
                Solution dp_h = dp_solve(inst, make_nice(g, heuristic_decomposition(g)));
                if (dp.feasible != ref.feasible)
                    fail = "feasibility mismatch";
                else if (dp.feasible && dp.objective != ref.objective)
                    fail = "objective " + std::to_string(dp.objective) + " vs oracle " +
                           std::to_string(ref.objective);
                else if (dp_h.feasible != dp.feasible ||
                         (dp.feasible && dp_h.objective != dp.objective))
                    fail = "heuristic-decomposition objective differs";
                else if (dp.feasible && !check_annotated(inst, dp))
                    fail = "witness infeasible";
            }
        } catch (const std::exception& e) {
            fail = std::string("exception: ") + e.what();
        }
        if (!fail.empty())
            details[trial] = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
                             ", tag=" + to_string(tag) + "): " + fail;
    }
    for (auto& d : details)
        if (!d.empty()) {
            ++rep.mismatches;
            rep.details.push_back(std::move(d));
        }
    return rep;
}

}  // namespace eptas
