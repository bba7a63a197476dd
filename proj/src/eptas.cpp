#include "eptas/eptas.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "eptas/dp.hpp"
#include "eptas/oracle.hpp"
#include "eptas/transversal.hpp"
#include "eptas/treewidth.hpp"

namespace eptas {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// (transversal factor, reduce/lift loss) per problem; their max drives the
// inner epsilon.
std::pair<double, double> loss_constants(Problem p) {
    switch (p) {
        case Problem::VertexCover: return {2, 1};
        case Problem::ConnectedVertexCover: return {2, 2};
        case Problem::FeedbackVertexSet: return {2, 1};
        case Problem::CyclePacking: return {2, 1};
        case Problem::MaxLeaf: return {6, 2};  // degree-3 rule is within 4k+2
        case Problem::DominatingSet: return {1, 1};
        case Problem::PartialVertexCover: return {1, 1};
    }
    return {1, 1};
}

}  // namespace

AnnotatedInstance reduce(Problem p, const Graph& g, const VertexSet& x) {
    if (p == Problem::PartialVertexCover)
        throw std::invalid_argument("partial-vc has no reduce step; use the dp solver directly");
    if (!x.is_subset_of_vertices(g)) throw std::invalid_argument("reduce: X not within V(G)");
    std::vector<char> in_x(g.num_vertices(), 0);
    for (Vertex v : x) in_x[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!in_x[v]) rest.push_back(v);
    auto ind = g.induced(rest);

    AnnotatedInstance inst;
    inst.tag = annotated_tag_of(p);
    inst.graph = std::move(ind.graph);
    inst.to_original = std::move(ind.to_original);
    if (p == Problem::ConnectedVertexCover || p == Problem::DominatingSet ||
        p == Problem::MaxLeaf) {
        std::vector<Vertex> r;
        for (Vertex v : neighborhood(g, x)) r.push_back(ind.to_local[v]);
        inst.anchors = VertexSet(std::move(r));
    }
    return inst;
}

namespace {

// connect the components of G[S] through single outside vertices; S must be
// a vertex cover of a connected graph
int connect_cover(const Graph& g, std::vector<char>& in_s) {
    int added = 0;
    for (;;) {
        // label components of G[S]
        std::vector<int> comp(g.num_vertices(), -1);
        int ncomp = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < g.num_vertices(); ++s) {
            if (!in_s[s] || comp[s] >= 0) continue;
            comp[s] = ncomp;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                for (Vertex v : g.neighbors(u))
                    if (in_s[v] && comp[v] < 0) {
                        comp[v] = ncomp;
                        stack.push_back(v);
                    }
            }
            ++ncomp;
        }
        if (ncomp <= 1) return added;
        Vertex connector = -1;
        for (Vertex z = 0; z < g.num_vertices() && connector < 0; ++z) {
            if (in_s[z]) continue;
            int first = -1;
            for (Vertex u : g.neighbors(z))
                if (in_s[u]) {
                    if (first < 0)
                        first = comp[u];
                    else if (comp[u] != first) {
                        connector = z;
                        break;
                    }
                }
        }
        if (connector < 0) throw std::logic_error("lift: cover components cannot be connected");
        in_s[connector] = 1;
        ++added;
    }
}

}  // namespace

Solution lift(Problem p, const Graph& g, const VertexSet& x, const AnnotatedInstance& inst,
              const Solution& sol_prime) {
    if (!sol_prime.feasible) throw std::invalid_argument("lift: annotated solution infeasible");
    Solution sol;
    sol.feasible = true;
    sol.provenance = Provenance::Eptas;
    auto to_orig = [&](Vertex v) {
        return inst.to_original.empty() ? v : inst.to_original[v];
    };

    switch (p) {
        case Problem::VertexCover:
        case Problem::FeedbackVertexSet:
        case Problem::DominatingSet: {
            std::vector<Vertex> s;
            for (Vertex v : sol_prime.witness) s.push_back(to_orig(v));
            for (Vertex v : x) s.push_back(v);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            sol.witness = std::move(s);
            sol.objective = static_cast<long long>(sol.witness.size());
            break;
        }
        case Problem::ConnectedVertexCover: {
            std::vector<char> in_s(g.num_vertices(), 0);
            for (Vertex v : sol_prime.witness) in_s[to_orig(v)] = 1;
            for (Vertex v : x) in_s[v] = 1;
            int connectors = connect_cover(g, in_s);
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (in_s[v]) sol.witness.push_back(v);
            sol.objective = static_cast<long long>(sol.witness.size());
            // additive loss stays within the connector bound
            long long base = sol_prime.objective;
            if (sol.objective - base >
                static_cast<long long>(x.size()) + std::max(0, connectors))
                throw std::logic_error("lift: connected cover loss exceeds bound");
            break;
        }
        case Problem::CyclePacking:
            for (const auto& cyc : sol_prime.cycles) {
                std::vector<Vertex> mapped;
                for (Vertex v : cyc) mapped.push_back(to_orig(v));
                sol.cycles.push_back(std::move(mapped));
            }
            sol.objective = static_cast<long long>(sol.cycles.size());
            break;
        case Problem::MaxLeaf: {
            std::vector<char> in_s(g.num_vertices(), 0);
            for (Vertex v : sol_prime.witness) in_s[to_orig(v)] = 1;
            // spanning forest: a tree per component of G - S', then S'
            // vertices attached as pendant leaves
            std::vector<int> comp(g.num_vertices(), -1);
            int ncomp = 0;
            std::vector<Vertex> stack;
            for (Vertex s = 0; s < g.num_vertices(); ++s) {
                if (in_s[s] || comp[s] >= 0) continue;
                comp[s] = ncomp;
                stack.push_back(s);
                while (!stack.empty()) {
                    Vertex u = stack.back();
                    stack.pop_back();
                    for (Vertex v : g.neighbors(u))
                        if (!in_s[v] && comp[v] < 0) {
                            comp[v] = ncomp;
                            sol.tree.emplace_back(u, v);
                            stack.push_back(v);
                        }
                }
                ++ncomp;
            }
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                if (!in_s[v]) continue;
                Vertex host = -1;
                for (Vertex u : g.neighbors(v))
                    if (!in_s[u]) {
                        host = u;
                        break;
                    }
                if (host < 0) throw std::logic_error("lift: leaf candidate has no host");
                sol.tree.emplace_back(host, v);
            }
            // join forest components with at most ncomp-1 extra edges
            {
                std::vector<int> uf(g.num_vertices());
                for (Vertex v = 0; v < g.num_vertices(); ++v) uf[v] = v;
                std::function<int(int)> find = [&](int a) {
                    while (uf[a] != a) a = uf[a] = uf[uf[a]];
                    return a;
                };
                for (auto [u, v] : sol.tree) uf[find(u)] = find(v);
                for (auto [u, v] : g.edges()) {
                    int a = find(u), b = find(v);
                    if (a != b) {
                        uf[a] = b;
                        sol.tree.emplace_back(u, v);
                    }
                }
            }
            std::vector<int> deg(g.num_vertices(), 0);
            for (auto [u, v] : sol.tree) {
                ++deg[u];
                ++deg[v];
            }
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (deg[v] == 1) sol.leaves.push_back(v);
            sol.objective = static_cast<long long>(sol.leaves.size());
            break;
        }
        case Problem::PartialVertexCover:
            throw std::invalid_argument("partial-vc has no lift step");
    }

    // additive loss sanity per the reduce/lift contract
    long long diff = std::llabs(sol.objective - sol_prime.objective);
    long long bound = 0;
    switch (p) {
        case Problem::VertexCover:
        case Problem::FeedbackVertexSet:
        case Problem::DominatingSet:
            bound = std::max(1, x.size());
            break;
        case Problem::CyclePacking:
            bound = 0;
            break;
        case Problem::MaxLeaf:
            bound = 2 * std::max(1, x.size());
            break;
        case Problem::ConnectedVertexCover: {
            // q = components of the annotated cover inside G - X
            std::vector<char> keep(inst.graph.num_vertices(), 0);
            for (Vertex v : sol_prime.witness) keep[v] = 1;
            long long q = 0;
            {
                std::vector<int> comp(inst.graph.num_vertices(), -1);
                std::vector<Vertex> st;
                for (Vertex s = 0; s < inst.graph.num_vertices(); ++s) {
                    if (!keep[s] || comp[s] >= 0) continue;
                    comp[s] = 1;
                    st.push_back(s);
                    while (!st.empty()) {
                        Vertex u = st.back();
                        st.pop_back();
                        for (Vertex w : inst.graph.neighbors(u))
                            if (keep[w] && comp[w] < 0) {
                                comp[w] = 1;
                                st.push_back(w);
                            }
                    }
                    ++q;
                }
            }
            bound = 2 * (std::max(1, x.size()) + q);
            break;
        }
        default:
            break;
    }
    if (diff > bound) throw std::logic_error("lift: additive loss exceeds contract");

    if (!check_plain(p, g, sol)) throw std::logic_error("lift: witness fails feasibility");
    return sol;
}

EptasResult eptas_solve(Problem p, const Graph& g, double epsilon, const EptasOptions& options) {
    if (p == Problem::PartialVertexCover)
        throw std::invalid_argument("partial-vc is solved by the dp solver, not the pipeline");
    if (!(epsilon > 0 && epsilon <= 1))
        throw std::invalid_argument("epsilon must be in (0, 1]");

    EptasResult res;
    res.epsilon = epsilon;

    if (p == Problem::MaxLeaf && !is_connected(g))
        throw std::invalid_argument("max-leaf requires a connected graph");
    if (p == Problem::ConnectedVertexCover) {
        int edged = 0;
        for (const auto& comp : components(g)) {
            auto ind = g.induced(comp.members());
            if (ind.graph.num_edges() > 0) ++edged;
        }
        if (edged > 1) {  // no connected cover can exist
            res.guarantee = "paper-constants";
            return res;
        }
    }

    auto t0 = std::chrono::steady_clock::now();
    VertexSet x;
    int eta;
    if (options.transversal) {
        x = *options.transversal;
        if (!x.is_subset_of_vertices(g))
            throw std::invalid_argument("transversal not within V(G)");
        std::vector<Vertex> rest;
        std::vector<char> in_x(g.num_vertices(), 0);
        for (Vertex v : x) in_x[v] = 1;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!in_x[v]) rest.push_back(v);
        eta = std::max(0, heuristic_decomposition(g.induced(rest).graph).width());
    } else {
        auto tr = build_transversal(p, g);  // throws for ds
        x = std::move(tr.x);
        eta = tr.eta;
    }
    if (options.eta) eta = *options.eta;
    res.stats.t_transversal_ms = ms_since(t0);
    res.stats.transversal_size = x.size();
    res.eta = eta;

    auto [rho1, rho2] = loss_constants(p);
    double rho = std::max(rho1, rho2);
    res.epsilon_inner = epsilon / (2 * rho * rho);
    double beta = options.beta ? *options.beta : planar_beta(eta, options.rho_grid);
    res.constants = derive_constants(res.epsilon_inner, options.lambda, beta, eta);
    double gamma = options.gamma ? *options.gamma : res.constants.gamma;
    res.guarantee = options.gamma ? "override-no-guarantee" : "paper-constants";
    if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");

    for (int attempt = 0;; ++attempt) {
        res.stats.gamma_used = gamma;
        auto t1 = std::chrono::steady_clock::now();
        ModulatorResult mod = bounded_tw_modulator(g, x, res.constants, gamma);
        res.stats.t_modulator_ms = ms_since(t1);
        res.stats.modulator_size = mod.x_prime.size();
        res.stats.width_g_minus_x = mod.width_before;
        res.stats.progress_guard_triggers = mod.report.progress_guard_triggers;

        auto t2 = std::chrono::steady_clock::now();
        AnnotatedInstance inst = reduce(p, g, mod.x_prime);
        res.stats.t_reduce_ms = ms_since(t2);

        auto t3 = std::chrono::steady_clock::now();
        NiceTreeDecomposition ntd = make_nice(inst.graph, heuristic_decomposition(inst.graph));
        res.stats.t_decompose_ms = ms_since(t3);
        res.stats.width = ntd.width();

        auto t4 = std::chrono::steady_clock::now();
        Solution annotated;
        try {
            DpStats dstats;
            annotated = dp_solve(inst, ntd, DpBudget{}, &dstats);
            res.stats.dp_states = dstats.total_states;
        } catch (const WidthOverBudget&) {
            if (attempt >= options.retry_cap) throw;
            gamma = std::max(1.0, gamma / 2);
            ++res.stats.retries;
            continue;
        }
        res.stats.t_dp_ms = ms_since(t4);
        if (!annotated.feasible) {
            res.solution = annotated;
            return res;
        }

        auto t5 = std::chrono::steady_clock::now();
        res.solution = lift(p, g, mod.x_prime, inst, annotated);
        res.stats.t_lift_ms = ms_since(t5);
        return res;
    }
}

}  // namespace eptas
