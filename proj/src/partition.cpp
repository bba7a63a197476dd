#include "eptas/partition.hpp"

#include <algorithm>
#include <cmath>

#include "eptas/treewidth.hpp"

namespace eptas {

PartitionConstants derive_constants(double epsilon, double lambda, double beta, double eta) {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must be in (0,1)");
    if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("lambda must be in (0,1)");
    if (beta < 0) throw std::invalid_argument("beta must be >= 0");
    if (eta < 0) throw std::invalid_argument("eta must be >= 0");
    PartitionConstants c;
    c.epsilon = epsilon;
    c.lambda = lambda;
    c.beta = beta;
    c.eta = eta;
    c.rho = std::pow(1.0 / 3.0, lambda) + std::pow(2.0 / 3.0, lambda);
    c.delta = (2 * epsilon + 1) * (beta + eta + 1) / (c.rho - 1);
    c.gamma = std::pow(3 * c.delta / epsilon, 1.0 / (1.0 - lambda));
    c.tau = eta + beta * std::pow(c.gamma, lambda);
    return c;
}

double planar_beta(double eta, double rho_grid) {
    if (rho_grid <= 0) throw std::invalid_argument("rho_grid must be positive");
    return 2.0 * (eta + 1) / rho_grid;
}

namespace {

struct Partitioner {
    const Graph& g;
    double gamma;
    std::vector<Vertex> emitted;
    int depth_seen = 0;
    int guard_triggers = 0;

    // region: vertices of the current subproblem; xcur: the working set,
    // always a subset of region
    void recurse(std::vector<Vertex> region, std::vector<Vertex> xcur, int depth) {
        depth_seen = std::max(depth_seen, depth);
        if (static_cast<double>(xcur.size()) <= gamma) return;

        auto ind = g.induced(region);
        std::vector<double> w(ind.graph.num_vertices(), 0.0);
        std::vector<char> in_xcur(g.num_vertices(), 0);
        for (Vertex v : xcur) {
            w[ind.to_local[v]] = 1.0;
            in_xcur[v] = 1;
        }
        TreeDecomposition td = heuristic_decomposition(ind.graph);
        TriPartition tp;
        try {
            tp = balanced_separator(ind.graph, td, w);
        } catch (const std::runtime_error&) {
            // no partition meets the window on this region; close the branch
            // like a failed-progress step so the X-overlap bound still holds
            ++guard_triggers;
            emitted.insert(emitted.end(), xcur.begin(), xcur.end());
            return;
        }

        std::vector<Vertex> sep;
        for (Vertex v : tp.separator) sep.push_back(ind.to_original[v]);
        std::sort(sep.begin(), sep.end());
        emitted.insert(emitted.end(), sep.begin(), sep.end());

        auto descend = [&](const VertexSet& side_local) {
            std::vector<Vertex> side;
            for (Vertex v : side_local) side.push_back(ind.to_original[v]);
            std::vector<Vertex> child_region = side;
            child_region.insert(child_region.end(), sep.begin(), sep.end());
            std::sort(child_region.begin(), child_region.end());
            std::vector<Vertex> child_x = sep;
            for (Vertex v : side)
                if (in_xcur[v]) child_x.push_back(v);
            std::sort(child_x.begin(), child_x.end());
            if (child_x.size() >= xcur.size()) {
                // no shrinkage: close the branch by emitting the whole set
                ++guard_triggers;
                emitted.insert(emitted.end(), child_x.begin(), child_x.end());
                return;
            }
            recurse(std::move(child_region), std::move(child_x), depth + 1);
        };
        descend(tp.left);
        descend(tp.right);
    }
};

}  // namespace

PartitionResult recursive_partition(const Graph& g, const VertexSet& x, double gamma) {
    if (!x.is_subset_of_vertices(g)) throw std::invalid_argument("recursive_partition: X not within V(G)");
    if (gamma < 1) throw std::invalid_argument("recursive_partition: gamma must be >= 1");

    std::vector<char> in_x(g.num_vertices(), 0);
    for (Vertex v : x) in_x[v] = 1;

    PartitionResult res;
    res.report.x_size = x.size();
    if (static_cast<double>(x.size()) <= gamma) {
        res.report.base_case = true;
    } else {
        Partitioner part{g, gamma, {}, 0, 0};
        std::vector<Vertex> all(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
        part.recurse(std::move(all), std::vector<Vertex>(x.begin(), x.end()), 0);
        res.x_prime = VertexSet(std::move(part.emitted));
        res.report.recursion_depth = part.depth_seen;
        res.report.progress_guard_triggers = part.guard_triggers;
    }
    res.report.xprime_size = res.x_prime.size();
    res.report.ratio =
        static_cast<double>(res.x_prime.size()) / std::max(1, x.size());

    // per-component accounting of G - X'
    std::vector<char> in_xp(g.num_vertices(), 0);
    for (Vertex v : res.x_prime) in_xp[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!in_xp[v]) rest.push_back(v);
    auto ind = g.induced(rest);
    for (const auto& comp_local : components(ind.graph)) {
        std::vector<Vertex> comp;
        for (Vertex v : comp_local) comp.push_back(ind.to_original[v]);
        PartitionReport::ComponentStat st;
        st.size = static_cast<int>(comp.size());
        for (Vertex v : comp)
            if (in_x[v]) ++st.x_overlap;
        st.boundary = neighborhood(g, VertexSet(comp)).size();
        st.heuristic_width = heuristic_decomposition(g.induced(comp).graph).width();
        res.report.components.push_back(st);
    }
    return res;
}

ModulatorResult bounded_tw_modulator(const Graph& g, const VertexSet& x,
                                     const PartitionConstants& constants,
                                     double gamma_override) {
    double gamma = gamma_override > 0 ? gamma_override : constants.gamma;
    ModulatorResult res;
    {
        std::vector<Vertex> rest;
        std::vector<char> in_x(g.num_vertices(), 0);
        for (Vertex v : x) in_x[v] = 1;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!in_x[v]) rest.push_back(v);
        res.width_before = heuristic_decomposition(g.induced(rest).graph).width();
    }
    auto part = recursive_partition(g, x, gamma);
    res.x_prime = std::move(part.x_prime);
    res.report = std::move(part.report);
    {
        std::vector<Vertex> rest;
        std::vector<char> in_xp(g.num_vertices(), 0);
        for (Vertex v : res.x_prime) in_xp[v] = 1;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!in_xp[v]) rest.push_back(v);
        res.width_after = heuristic_decomposition(g.induced(rest).graph).width();
    }
    return res;
}

}  // namespace eptas
