#include "eptas/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "eptas/dp.hpp"
#include "eptas/treewidth.hpp"

namespace eptas {

VertexSet vc_matching_transversal(const Graph& g) {
    std::vector<char> matched(g.num_vertices(), 0);
    std::vector<Vertex> x;
    for (auto [u, v] : g.edges())
        if (!matched[u] && !matched[v]) {
            matched[u] = matched[v] = 1;
            x.push_back(u);
            x.push_back(v);
        }
    return VertexSet(std::move(x));
}

namespace {

// Mutable graph view for the local-ratio loop.
struct WorkGraph {
    std::vector<std::unordered_set<Vertex>> adj;
    std::vector<char> alive;
    int alive_count = 0;

    explicit WorkGraph(const Graph& g) : adj(g.num_vertices()), alive(g.num_vertices(), 1) {
        alive_count = g.num_vertices();
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            for (Vertex v : g.neighbors(u)) adj[u].insert(v);
    }

    int deg(Vertex v) const { return static_cast<int>(adj[v].size()); }

    void remove(Vertex v) {
        for (Vertex u : adj[v]) adj[u].erase(v);
        adj[v].clear();
        alive[v] = 0;
        --alive_count;
    }

    // strip degree <= 1 vertices
    void cleanup() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < static_cast<int>(adj.size()); ++v)
                if (alive[v] && deg(v) <= 1) {
                    remove(v);
                    changed = true;
                }
        }
    }

    // A cycle in which every vertex except at most one has degree exactly 2.
    // Chains of degree-2 vertices either close into a pure cycle or attach to
    // branch vertices; the chain qualifies when both attachments coincide.
    std::vector<Vertex> semidisjoint_cycle() const {
        int n = static_cast<int>(adj.size());
        std::vector<char> visited(n, 0);
        for (Vertex s = 0; s < n; ++s) {
            if (!alive[s] || visited[s] || deg(s) != 2) continue;
            std::vector<Vertex> chain = {s};
            visited[s] = 1;
            Vertex ends[2];
            int e = 0;
            for (int dir = 0; dir < 2; ++dir) {
                auto it = adj[s].begin();
                if (dir == 1) ++it;
                Vertex prev = s, cur = *it;
                while (deg(cur) == 2 && !visited[cur]) {
                    visited[cur] = 1;
                    if (dir == 0)
                        chain.push_back(cur);
                    else
                        chain.insert(chain.begin(), cur);
                    Vertex nxt = -1;
                    for (Vertex w : adj[cur])
                        if (w != prev) nxt = w;
                    if (nxt < 0) break;  // multigraph-free safety
                    prev = cur;
                    cur = nxt;
                }
                if (visited[cur] && deg(cur) == 2) {
                    // closed a pure degree-2 cycle
                    return chain;
                }
                ends[e++] = cur;
            }
            if (ends[0] == ends[1]) {
                chain.push_back(ends[0]);  // one branch vertex allowed
                return chain;
            }
        }
        return {};
    }
};

}  // namespace

VertexSet fvs_2approx(const Graph& g) {
    WorkGraph work(g);
    std::vector<double> w(g.num_vertices(), 1.0);
    work.cleanup();
    std::vector<Vertex> stack;  // removal order for reverse delete
    constexpr double kEps = 1e-12;

    while (work.alive_count > 0) {
        auto cyc = work.semidisjoint_cycle();
        if (!cyc.empty()) {
            double gamma = w[cyc[0]];
            for (Vertex v : cyc) gamma = std::min(gamma, w[v]);
            for (Vertex v : cyc) w[v] -= gamma;
        } else {
            double gamma = -1;
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (work.alive[v]) {
                    double r = w[v] / (work.deg(v) - 1);
                    if (gamma < 0 || r < gamma) gamma = r;
                }
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (work.alive[v]) w[v] -= gamma * (work.deg(v) - 1);
        }
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (work.alive[v] && w[v] <= kEps) {
                stack.push_back(v);
                work.remove(v);
            }
        work.cleanup();
    }

    // reverse delete: drop vertices whose removal keeps the rest acyclic
    std::vector<char> in_f(g.num_vertices(), 0);
    for (Vertex v : stack) in_f[v] = 1;
    auto acyclic_without = [&](const std::vector<char>& fvs) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!fvs[v]) keep.push_back(v);
        return is_acyclic(g.induced(keep).graph);
    };
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        in_f[*it] = 0;
        if (!acyclic_without(in_f)) in_f[*it] = 1;
    }
    std::vector<Vertex> x;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (in_f[v]) x.push_back(v);
    return VertexSet(std::move(x));
}

VertexSet maxleaf_transversal(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("maxleaf transversal: disconnected input");
    std::vector<Vertex> x;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 3) x.push_back(v);
    return VertexSet(std::move(x));
}

EtaTransversalResult eta_transversal_approx(const Graph& g, int gamma_cap) {
    if (gamma_cap < 0 || gamma_cap > 2)
        throw std::invalid_argument("eta_transversal_approx: gamma_cap must be in [0,2]");
    EtaTransversalResult res;
    std::vector<char> alive(g.num_vertices(), 1);
    DpBudget dp_budget;

    auto alive_vertices = [&]() {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (alive[v]) out.push_back(v);
        return out;
    };

    for (;;) {
        auto verts = alive_vertices();
        auto cur = g.induced(verts);
        if (is_acyclic(cur.graph)) break;

        // candidate separators Z by size, then lexicographically
        bool progressed = false;
        int nn = cur.graph.num_vertices();
        std::vector<std::vector<int>> zs = {{}};
        for (int a = 0; a < nn && gamma_cap >= 1; ++a) zs.push_back({a});
        for (int a = 0; a < nn && gamma_cap >= 2; ++a)
            for (int b = a + 1; b < nn; ++b) zs.push_back({a, b});

        for (const auto& z : zs) {
            std::vector<char> keep(nn, 1);
            for (int v : z) keep[v] = 0;
            std::vector<Vertex> rest;
            for (int v = 0; v < nn; ++v)
                if (keep[v]) rest.push_back(v);
            auto sub = cur.graph.induced(rest);
            for (const auto& comp : components(sub.graph)) {
                std::vector<Vertex> comp_cur;  // component in cur-local ids
                for (Vertex v : comp) comp_cur.push_back(sub.to_original[v]);
                auto cg = cur.graph.induced(comp_cur);
                if (is_acyclic(cg.graph)) continue;
                auto td = heuristic_decomposition(cg.graph);
                if (td.width() + 1 > dp_budget.max_bag_partition) continue;
                // exact feedback vertex set on the component
                auto inst = make_instance(AnnotatedTag::Fvs, cg.graph);
                Solution xc = dp_solve(inst, make_nice(cg.graph, td), dp_budget);
                for (Vertex v : xc.witness) res.x.insert(cur.to_original[cg.to_original[v]]);
                VertexSet boundary = neighborhood(cur.graph, VertexSet(comp_cur));
                for (Vertex v : boundary) res.x.insert(cur.to_original[v]);
                for (Vertex v : comp_cur) alive[cur.to_original[v]] = 0;
                for (Vertex v : boundary) alive[cur.to_original[v]] = 0;
                progressed = true;
                break;
            }
            if (progressed) break;
        }
        if (!progressed) {
            // enumeration exhausted; finish with the 2-approximation
            auto fallback = fvs_2approx(cur.graph);
            for (Vertex v : fallback) res.x.insert(cur.to_original[v]);
            res.fallback_used = true;
            break;
        }
        ++res.iterations;
    }
    return res;
}

TransversalResult build_transversal(Problem p, const Graph& g) {
    switch (p) {
        case Problem::VertexCover:
        case Problem::ConnectedVertexCover:
            return {vc_matching_transversal(g), 0};
        case Problem::FeedbackVertexSet:
        case Problem::CyclePacking:
            return {fvs_2approx(g), 1};
        case Problem::MaxLeaf:
            return {maxleaf_transversal(g), 2};
        case Problem::DominatingSet:
        case Problem::PartialVertexCover:
            throw std::invalid_argument(to_string(p) + " requires a user-supplied transversal");
    }
    throw std::invalid_argument("unknown problem");
}

}  // namespace eptas
