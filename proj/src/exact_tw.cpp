#include <algorithm>
#include <bit>
#include <unordered_set>

#include "eptas/treewidth.hpp"

namespace eptas {

namespace {

// Branch-and-bound decision procedure: can G be eliminated with every vertex
// having degree <= w at its elimination time? Works on bitmask adjacency,
// memoizes failed eliminated-sets.
struct TwSearch {
    int n;
    int w;
    uint64_t budget;
    uint64_t explored = 0;
    bool budget_hit = false;
    std::unordered_set<uint64_t> failed;
    std::vector<Vertex> order;

    bool decide(std::vector<uint64_t> adj, uint64_t eliminated) {
        if (budget_hit) return false;
        if (++explored > budget) {
            budget_hit = true;
            return false;
        }
        if (std::popcount(eliminated) == n) return true;
        if (failed.count(eliminated)) return false;

        auto deg = [&](int v) { return std::popcount(adj[v]); };
        auto eliminate = [&](std::vector<uint64_t>& a, int v) {
            uint64_t nb = a[v];
            for (int u = 0; u < n; ++u)
                if (nb >> u & 1) a[u] = (a[u] | nb) & ~(1ULL << u) & ~(1ULL << v);
            a[v] = 0;
        };
        auto simplicial = [&](int v) {
            uint64_t nb = adj[v];
            for (int u = 0; u < n; ++u)
                if (nb >> u & 1)
                    if ((nb & ~adj[u] & ~(1ULL << u)) != 0) return false;
            return true;
        };

        // forced moves: simplicial vertices, and degree <= 2 when w >= 2
        for (int v = 0; v < n; ++v) {
            if (eliminated >> v & 1) continue;
            int d = deg(v);
            bool forced = d <= 1 || (d <= 2 && w >= 2);
            if (!forced && d <= w) forced = simplicial(v);
            if (forced) {
                if (d > w) return false;  // simplicial vertex forces width >= d
                eliminate(adj, v);
                order.push_back(v);
                bool ok = decide(std::move(adj), eliminated | (1ULL << v));
                if (!ok) {
                    order.pop_back();
                    if (!budget_hit) failed.insert(eliminated);
                }
                return ok;
            }
            if (d > w && simplicial(v)) return false;
        }

        // branch on vertices of degree <= w, cheapest fill first
        std::vector<std::pair<long long, int>> cand;
        for (int v = 0; v < n; ++v) {
            if (eliminated >> v & 1) continue;
            if (deg(v) > w) continue;
            long long f = 0;
            uint64_t nb = adj[v];
            for (int u = 0; u < n; ++u)
                if (nb >> u & 1) f += std::popcount(nb & ~adj[u] & ~(1ULL << u));
            cand.emplace_back(f / 2, v);
        }
        if (cand.empty()) {
            failed.insert(eliminated);
            return false;
        }
        std::sort(cand.begin(), cand.end());
        for (auto [f, v] : cand) {
            auto next = adj;
            eliminate(next, v);
            order.push_back(v);
            if (decide(std::move(next), eliminated | (1ULL << v))) return true;
            order.pop_back();
            if (budget_hit) return false;
        }
        failed.insert(eliminated);
        return false;
    }
};

int degeneracy(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && (v < 0 || deg[u] < deg[v])) v = u;
        best = std::max(best, deg[v]);
        gone[v] = 1;
        for (Vertex u : g.neighbors(v))
            if (!gone[u]) --deg[u];
    }
    return best;
}

}  // namespace

ExactTwResult exact_treewidth(const Graph& g, int ub, uint64_t node_budget) {
    int n = g.num_vertices();
    ExactTwResult res;
    if (n == 0) {
        res.status = ExactTwResult::Status::Found;
        res.width = -1;
        res.td = TreeDecomposition{{{}}, {}};
        return res;
    }
    if (n > 60) throw std::invalid_argument("exact_treewidth: n too large");

    std::vector<uint64_t> adj0(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) adj0[u] |= 1ULL << v;

    int lb = degeneracy(g);
    uint64_t total_explored = 0;
    for (int w = lb; w <= std::min(ub, n - 1); ++w) {
        TwSearch search{n, w, node_budget, 0, false, {}, {}};
        bool ok = search.decide(adj0, 0);
        total_explored += search.explored;
        if (search.budget_hit) {
            res.status = ExactTwResult::Status::BudgetExceeded;
            res.nodes_explored = total_explored;
            return res;
        }
        if (ok) {
            res.status = ExactTwResult::Status::Found;
            res.width = w;
            res.td = decomposition_from_order(g, search.order);
            res.nodes_explored = total_explored;
            return res;
        }
    }
    res.status = ExactTwResult::Status::ExceedsUb;
    res.nodes_explored = total_explored;
    return res;
}

}  // namespace eptas
