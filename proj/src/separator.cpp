#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>

#include "eptas/treewidth.hpp"

namespace eptas {

namespace {

// Linear-time validity check (no witnesses). Connectivity per vertex uses the
// holders-vs-holding-edges count; edge coverage uses top-bag membership.
bool validate_fast(const Graph& g, const TreeDecomposition& td) {
    int n = g.num_vertices();
    int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return false;
    if (static_cast<int>(td.tree_edges.size()) != nb - 1) return false;
    std::vector<std::vector<int>> tadj(nb);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= nb || b >= nb) return false;
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    std::vector<int> holders(n, 0), holding_edges(n, 0);
    for (const auto& bag : td.bags)
        for (Vertex v : bag) {
            if (v < 0 || v >= n) throw std::invalid_argument("bag references vertex outside G");
            ++holders[v];
        }
    for (Vertex v = 0; v < n; ++v)
        if (holders[v] == 0) return false;
    for (auto [a, b] : td.tree_edges) {
        const auto& ba = td.bags[a];
        const auto& bb = td.bags[b];
        size_t i = 0, j = 0;
        while (i < ba.size() && j < bb.size()) {
            if (ba[i] < bb[j])
                ++i;
            else if (ba[i] > bb[j])
                ++j;
            else {
                ++holding_edges[ba[i]];
                ++i;
                ++j;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (holding_edges[v] != holders[v] - 1) return false;
    // tree connectivity follows: every per-vertex holder set is connected and
    // bags cover V, but the tree itself could still be split if some bag set
    // is empty of shared vertices; check tree connectivity directly.
    {
        std::vector<char> seen(nb, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int w : tadj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (cnt != nb) return false;
    }
    // top bags (root 0)
    std::vector<int> parent(nb, -1), order;
    {
        std::vector<int> stack = {0};
        std::vector<char> seen(nb, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int w : tadj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    stack.push_back(w);
                }
        }
    }
    std::vector<int> top(n, -1);
    for (int i : order)  // root-first order: first holder seen is the topmost
        for (Vertex v : td.bags[i])
            if (top[v] < 0) top[v] = i;
    auto in_bag = [&](int node, Vertex v) {
        const auto& b = td.bags[node];
        return std::binary_search(b.begin(), b.end(), v);
    };
    for (auto [u, v] : g.edges())
        if (!in_bag(top[u], v) && !in_bag(top[v], u)) return false;
    return true;
}

struct SeparatorSearch {
    const Graph& g;
    const TreeDecomposition& td;
    const std::vector<double>& w;
    double total;
    int cap;  // |S| <= cap = width+1

    // Evaluates a candidate separator; returns the packed partition when all
    // three separator conditions hold.
    std::optional<TriPartition> eval(const std::vector<Vertex>& sep, int source) const {
        if (static_cast<int>(sep.size()) > cap) return std::nullopt;
        int n = g.num_vertices();
        std::vector<char> in_s(n, 0);
        double ws = 0;
        for (Vertex v : sep) {
            if (in_s[v]) return std::nullopt;
            in_s[v] = 1;
            ws += w[v];
        }
        // components of G - S with weights
        std::vector<int> comp(n, -1);
        std::vector<double> cw;
        std::vector<std::vector<Vertex>> cmembers;
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n; ++s) {
            if (in_s[s] || comp[s] >= 0) continue;
            int c = static_cast<int>(cw.size());
            cw.push_back(0);
            cmembers.emplace_back();
            comp[s] = c;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                cw[c] += w[u];
                cmembers[c].push_back(u);
                for (Vertex x : g.neighbors(u))
                    if (!in_s[x] && comp[x] < 0) {
                        comp[x] = c;
                        stack.push_back(x);
                    }
            }
        }
        for (double x : cw)
            if (2 * x > total) return std::nullopt;
        double W = total - ws;
        TriPartition tp;
        tp.separator = VertexSet(sep);
        tp.w_sep = ws;
        tp.source_node = source;
        std::vector<Vertex> lmem, rmem;
        if (W <= 0) {
            // separator carries all weight; any split is fine
            for (size_t c = 0; c < cmembers.size(); ++c) {
                auto& dst = (c % 2 == 0) ? lmem : rmem;
                dst.insert(dst.end(), cmembers[c].begin(), cmembers[c].end());
            }
            tp.w_left = tp.w_right = 0;
        } else {
            double maxc = cw.empty() ? 0 : *std::max_element(cw.begin(), cw.end());
            if (3 * maxc > 2 * W) return std::nullopt;  // no packing can meet the window
            // components in decreasing weight, ties by smallest member
            std::vector<int> idx(cw.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                if (cw[a] != cw[b]) return cw[a] > cw[b];
                return cmembers[a].front() < cmembers[b].front();
            });
            double wl = 0, wr = 0;
            for (int c : idx) {
                if (3 * wl < W) {
                    wl += cw[c];
                    lmem.insert(lmem.end(), cmembers[c].begin(), cmembers[c].end());
                } else {
                    wr += cw[c];
                    rmem.insert(rmem.end(), cmembers[c].begin(), cmembers[c].end());
                }
            }
            if (3 * wl < W || 3 * wl > 2 * W || 3 * wr < W || 3 * wr > 2 * W) return std::nullopt;
            tp.w_left = wl;
            tp.w_right = wr;
        }
        tp.left = VertexSet(std::move(lmem));
        tp.right = VertexSet(std::move(rmem));
        return tp;
    }

    // Bag reached by descending from the root into any subtree whose
    // top-assigned weight exceeds half the total.
    int centroid_bag() const {
        int nb = static_cast<int>(td.bags.size());
        std::vector<std::vector<int>> tadj(nb);
        for (auto [a, b] : td.tree_edges) {
            tadj[a].push_back(b);
            tadj[b].push_back(a);
        }
        for (auto& v : tadj) std::sort(v.begin(), v.end());
        std::vector<int> parent(nb, -1), order;
        {
            std::vector<int> stack = {0};
            std::vector<char> seen(nb, 0);
            seen[0] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                order.push_back(u);
                for (int x : tadj[u])
                    if (!seen[x]) {
                        seen[x] = 1;
                        parent[x] = u;
                        stack.push_back(x);
                    }
            }
        }
        std::vector<double> mu(nb, 0);
        {
            std::vector<char> placed(g.num_vertices(), 0);
            for (int i : order)
                for (Vertex v : td.bags[i])
                    if (!placed[v]) {
                        placed[v] = 1;
                        mu[i] += w[v];
                    }
        }
        std::vector<double> sub(mu);
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
        int cur = 0;
        for (;;) {
            int next = -1;
            for (int c : tadj[cur])
                if (c != parent[cur] && 2 * sub[c] > total) {
                    next = c;
                    break;
                }
            if (next < 0) return cur;
            cur = next;
        }
    }
};

}  // namespace

TriPartition balanced_separator(const Graph& g, const TreeDecomposition& td,
                                const std::vector<double>& weights) {
    int n = g.num_vertices();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("balanced_separator: weight vector size mismatch");
    for (double x : weights)
        if (x < 0 || !std::isfinite(x)) throw std::invalid_argument("negative weight");
    if (!validate_fast(g, td)) throw std::invalid_argument("balanced_separator: invalid decomposition");

    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    SeparatorSearch search{g, td, weights, total, td.width() + 1};

    // centroid bag first, then every bag, then bag subsets, then heavy
    // prefixes, then (small n) exhaustive subsets. First candidate meeting
    // all three separator conditions wins; order is deterministic.
    int cb = search.centroid_bag();
    if (auto tp = search.eval(td.bags[cb], cb)) return *tp;
    int nb = static_cast<int>(td.bags.size());
    for (int i = 0; i < nb; ++i)
        if (auto tp = search.eval(td.bags[i], i)) return *tp;
    if (n <= 1200) {
        for (int i = 0; i < nb; ++i) {
            const auto& bag = td.bags[i];
            int k = static_cast<int>(bag.size());
            if (k > 20) continue;
            for (uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
                std::vector<Vertex> sub;
                for (int b = 0; b < k; ++b)
                    if (mask >> b & 1) sub.push_back(bag[b]);
                if (auto tp = search.eval(sub, i)) return *tp;
            }
        }
    }
    {
        std::vector<Vertex> byweight(n);
        std::iota(byweight.begin(), byweight.end(), 0);
        std::stable_sort(byweight.begin(), byweight.end(),
                         [&](Vertex a, Vertex b) { return weights[a] > weights[b]; });
        for (int k = std::min(search.cap, n); k >= 0; --k) {
            std::vector<Vertex> sep(byweight.begin(), byweight.begin() + k);
            if (auto tp = search.eval(sep, -1)) return *tp;
        }
    }
    if (n <= 18) {
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) > search.cap) continue;
            std::vector<Vertex> sep;
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) sep.push_back(b);
            if (auto tp = search.eval(sep, -1)) return *tp;
        }
    }
    throw std::runtime_error("balanced_separator: candidate search exhausted");
}

}  // namespace eptas
