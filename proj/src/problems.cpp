#include "eptas/problems.hpp"

#include <algorithm>

namespace eptas {

std::string to_string(Problem p) {
    switch (p) {
        case Problem::VertexCover: return "vc";
        case Problem::ConnectedVertexCover: return "cvc";
        case Problem::FeedbackVertexSet: return "fvs";
        case Problem::CyclePacking: return "cycle-packing";
        case Problem::DominatingSet: return "ds";
        case Problem::MaxLeaf: return "max-leaf";
        case Problem::PartialVertexCover: return "partial-vc";
    }
    return "?";
}

std::string to_string(AnnotatedTag t) {
    switch (t) {
        case AnnotatedTag::Vc: return "vc";
        case AnnotatedTag::Fvs: return "fvs";
        case AnnotatedTag::CyclePacking: return "cycle-packing";
        case AnnotatedTag::CvcAnnotated: return "cvc-annotated";
        case AnnotatedTag::DsAnnotated: return "ds-annotated";
        case AnnotatedTag::MaxleafAnnotated: return "maxleaf-annotated";
        case AnnotatedTag::PartialVc: return "partial-vc";
    }
    return "?";
}

std::optional<Problem> problem_from_string(const std::string& s) {
    if (s == "vc" || s == "vertex-cover") return Problem::VertexCover;
    if (s == "cvc" || s == "connected-vertex-cover") return Problem::ConnectedVertexCover;
    if (s == "fvs" || s == "feedback-vertex-set") return Problem::FeedbackVertexSet;
    if (s == "cycle-packing" || s == "cp") return Problem::CyclePacking;
    if (s == "ds" || s == "dominating-set") return Problem::DominatingSet;
    if (s == "max-leaf" || s == "maxleaf") return Problem::MaxLeaf;
    if (s == "partial-vc" || s == "pvc") return Problem::PartialVertexCover;
    return std::nullopt;
}

bool is_minimization(AnnotatedTag t) {
    return t != AnnotatedTag::CyclePacking && t != AnnotatedTag::MaxleafAnnotated;
}

bool is_minimization(Problem p) {
    return p != Problem::CyclePacking && p != Problem::MaxLeaf;
}

AnnotatedTag annotated_tag_of(Problem p) {
    switch (p) {
        case Problem::VertexCover: return AnnotatedTag::Vc;
        case Problem::ConnectedVertexCover: return AnnotatedTag::CvcAnnotated;
        case Problem::FeedbackVertexSet: return AnnotatedTag::Fvs;
        case Problem::CyclePacking: return AnnotatedTag::CyclePacking;
        case Problem::DominatingSet: return AnnotatedTag::DsAnnotated;
        case Problem::MaxLeaf: return AnnotatedTag::MaxleafAnnotated;
        case Problem::PartialVertexCover: return AnnotatedTag::PartialVc;
    }
    return AnnotatedTag::Vc;
}

AnnotatedInstance make_instance(AnnotatedTag tag, Graph g, VertexSet anchors,
                                std::optional<long long> budget) {
    AnnotatedInstance inst;
    inst.tag = tag;
    inst.graph = std::move(g);
    inst.anchors = std::move(anchors);
    inst.budget = budget;
    if (!inst.anchors.is_subset_of_vertices(inst.graph))
        throw std::invalid_argument("anchors outside V(G)");
    if (inst.budget && *inst.budget > inst.graph.num_edges())
        throw std::invalid_argument("budget exceeds edge count");
    return inst;
}

namespace {

std::vector<char> mask_of(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("witness vertex out of range");
        in[v] = 1;
    }
    return in;
}

// components of the subgraph induced by `keep`
std::vector<std::vector<Vertex>> sub_components(const Graph& g, const std::vector<char>& keep) {
    std::vector<int> comp(g.num_vertices(), -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (!keep[s] || comp[s] >= 0) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out[c].push_back(u);
            for (Vertex v : g.neighbors(u))
                if (keep[v] && comp[v] < 0) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
    }
    return out;
}

}  // namespace

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& s) {
    auto in = mask_of(g, s);
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

bool is_feedback_vertex_set(const Graph& g, const std::vector<Vertex>& s) {
    auto in = mask_of(g, s);
    long long nv = 0, ne = 0;
    std::vector<char> keep(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) keep[v] = !in[v];
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (keep[v]) ++nv;
    for (auto [u, v] : g.edges())
        if (keep[u] && keep[v]) ++ne;
    return ne + static_cast<long long>(sub_components(g, keep).size()) == nv;
}

bool is_dominating_set_annotated(const Graph& g, const VertexSet& anchors,
                                 const std::vector<Vertex>& s) {
    auto in = mask_of(g, s);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (in[v] || anchors.contains(v)) continue;
        bool dom = false;
        for (Vertex u : g.neighbors(v))
            if (in[u]) {
                dom = true;
                break;
            }
        if (!dom) return false;
    }
    return true;
}

bool is_cvc_annotated(const Graph& g, const VertexSet& anchors, const std::vector<Vertex>& s) {
    if (!is_vertex_cover(g, s)) return false;
    auto in = mask_of(g, s);
    auto comps = sub_components(g, in);
    if (anchors.empty()) return comps.size() <= 1;
    for (const auto& comp : comps) {
        bool anchored = false;
        for (Vertex v : comp)
            if (anchors.contains(v)) {
                anchored = true;
                break;
            }
        if (!anchored) return false;
    }
    return true;
}

bool is_maxleaf_annotated(const Graph& g, const VertexSet& anchors, const std::vector<Vertex>& s) {
    auto in = mask_of(g, s);
    // every selected non-anchor vertex needs a neighbor outside the set
    for (Vertex v : s) {
        if (anchors.contains(v)) continue;
        bool out_nb = false;
        for (Vertex u : g.neighbors(v))
            if (!in[u]) {
                out_nb = true;
                break;
            }
        if (!out_nb) return false;
    }
    std::vector<char> keep(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) keep[v] = !in[v];
    auto comps = sub_components(g, keep);
    if (anchors.empty()) {
        if (g.num_vertices() == 0) return true;
        return comps.size() == 1;
    }
    for (const auto& comp : comps) {
        bool anchored = false;
        for (Vertex v : comp)
            if (anchors.contains(v)) {
                anchored = true;
                break;
            }
        if (!anchored) return false;
    }
    return true;
}

bool covers_at_least(const Graph& g, const std::vector<Vertex>& s, long long t) {
    auto in = mask_of(g, s);
    long long covered = 0;
    for (auto [u, v] : g.edges())
        if (in[u] || in[v]) ++covered;
    return covered >= t;
}

bool is_cycle_packing(const Graph& g, const std::vector<std::vector<Vertex>>& cycles) {
    std::vector<char> used(g.num_vertices(), 0);
    for (const auto& cyc : cycles) {
        if (cyc.size() < 3) return false;
        for (size_t i = 0; i < cyc.size(); ++i) {
            Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (u < 0 || u >= g.num_vertices()) return false;
            if (used[u]) return false;
            if (!g.has_edge(u, v)) return false;
        }
        for (Vertex u : cyc) used[u] = 1;
    }
    return true;
}

bool is_spanning_tree(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& tree) {
    int n = g.num_vertices();
    if (n == 0) return tree.empty();
    if (static_cast<int>(tree.size()) != n - 1) return false;
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };
    for (auto [u, v] : tree) {
        if (!g.has_edge(u, v)) return false;
        int a = find(u), b = find(v);
        if (a == b) return false;
        uf[a] = b;
    }
    return true;
}

bool check_annotated(const AnnotatedInstance& inst, const Solution& sol) {
    if (!sol.feasible) return false;
    const Graph& g = inst.graph;
    switch (inst.tag) {
        case AnnotatedTag::Vc:
            return is_vertex_cover(g, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case AnnotatedTag::Fvs:
            return is_feedback_vertex_set(g, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case AnnotatedTag::CyclePacking:
            return is_cycle_packing(g, sol.cycles) &&
                   sol.objective == static_cast<long long>(sol.cycles.size());
        case AnnotatedTag::CvcAnnotated:
            return is_cvc_annotated(g, inst.anchors, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case AnnotatedTag::DsAnnotated:
            return is_dominating_set_annotated(g, inst.anchors, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case AnnotatedTag::MaxleafAnnotated:
            return is_maxleaf_annotated(g, inst.anchors, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case AnnotatedTag::PartialVc:
            return inst.budget && covers_at_least(g, sol.witness, *inst.budget) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
    }
    return false;
}

bool check_plain(Problem p, const Graph& g, const Solution& sol,
                 std::optional<long long> budget) {
    if (!sol.feasible) return false;
    switch (p) {
        case Problem::VertexCover:
            return is_vertex_cover(g, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case Problem::ConnectedVertexCover:
            return is_cvc_annotated(g, VertexSet{}, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case Problem::FeedbackVertexSet:
            return is_feedback_vertex_set(g, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case Problem::CyclePacking:
            return is_cycle_packing(g, sol.cycles) &&
                   sol.objective == static_cast<long long>(sol.cycles.size());
        case Problem::DominatingSet:
            return is_dominating_set_annotated(g, VertexSet{}, sol.witness) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
        case Problem::MaxLeaf: {
            if (!is_spanning_tree(g, sol.tree)) return false;
            std::vector<int> deg(g.num_vertices(), 0);
            for (auto [u, v] : sol.tree) {
                ++deg[u];
                ++deg[v];
            }
            std::vector<Vertex> leaves;
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (deg[v] == 1) leaves.push_back(v);
            return sol.objective == static_cast<long long>(leaves.size()) && leaves == sol.leaves;
        }
        case Problem::PartialVertexCover:
            return budget && covers_at_least(g, sol.witness, *budget) &&
                   sol.objective == static_cast<long long>(sol.witness.size());
    }
    return false;
}

}  // namespace eptas
