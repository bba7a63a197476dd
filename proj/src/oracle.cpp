#include "eptas/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eptas {
namespace oracle {

namespace {

constexpr int kMaxN = 16;

struct BitGraph {
    int n;
    long long m;
    std::vector<uint32_t> adj;

    explicit BitGraph(const Graph& g) : n(g.num_vertices()), m(g.num_edges()), adj(n, 0) {
        if (n > kMaxN) throw std::invalid_argument("oracle: size cap exceeded (n <= 16)");
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : g.neighbors(u)) adj[u] |= 1u << v;
    }

    // components of the induced subgraph on `mask`, as masks
    std::vector<uint32_t> comps(uint32_t mask) const {
        std::vector<uint32_t> out;
        uint32_t left = mask;
        while (left) {
            uint32_t seed = left & -left;
            uint32_t comp = seed, frontier = seed;
            while (frontier) {
                uint32_t next = 0;
                uint32_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj[v] & mask & ~comp;
                }
                comp |= next;
                frontier = next;
            }
            out.push_back(comp);
            left &= ~comp;
        }
        return out;
    }

    long long edges_inside(uint32_t mask) const {
        long long e = 0;
        uint32_t f = mask;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            e += std::popcount(adj[v] & mask);
        }
        return e / 2;
    }

    bool forest(uint32_t mask) const {
        return edges_inside(mask) + static_cast<long long>(comps(mask).size()) ==
               std::popcount(mask);
    }
};

// Lexicographic order on vertex sets: the lowest differing bit decides.
bool lex_less(uint32_t a, uint32_t b) {
    uint32_t d = a ^ b;
    if (d == 0) return false;
    return a & (d & -d);
}

struct Best {
    bool found = false;
    int size = 0;
    uint32_t mask = 0;

    void offer(uint32_t m, bool minimize) {
        int sz = std::popcount(m);
        if (!found || (minimize ? sz < size : sz > size) ||
            (sz == size && lex_less(m, mask))) {
            found = true;
            size = sz;
            mask = m;
        }
    }
    void merge(const Best& o, bool minimize) {
        if (o.found) offer(o.mask, minimize);
    }
};

// Full subset scan; `feasible` must be pure. The parallel path splits the
// mask space into fixed chunks so the merged result does not depend on the
// thread count.
template <typename F>
Best scan_subsets(int n, bool minimize, bool parallel, F&& feasible) {
    uint64_t space = 1ull << n;
    Best best;
    if (!parallel || space < (1u << 12)) {
        for (uint64_t mask = 0; mask < space; ++mask)
            if (feasible(static_cast<uint32_t>(mask))) best.offer(static_cast<uint32_t>(mask), minimize);
        return best;
    }
    constexpr int kChunks = 64;
    uint64_t chunk = (space + kChunks - 1) / kChunks;
    std::vector<Best> part(kChunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int c = 0; c < kChunks; ++c) {
        uint64_t lo = c * chunk, hi = std::min(space, lo + chunk);
        for (uint64_t mask = lo; mask < hi; ++mask)
            if (feasible(static_cast<uint32_t>(mask))) part[c].offer(static_cast<uint32_t>(mask), minimize);
    }
    for (const auto& p : part) best.merge(p, minimize);
    return best;
}

std::vector<Vertex> mask_to_vec(uint32_t mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// ---- cycle packing -----------------------------------------------------------
// Max packing over chordless cycles: every packing can be rewritten so each
// cycle is chordless without changing its cardinality, so the search only
// enumerates chordless cycles through the lowest free vertex.
struct CyclePacker {
    const BitGraph& bg;
    std::unordered_map<uint32_t, int> memo;

    // Enumerates chordless cycles through v inside mask, each exactly once.
    // The path grows v, p1, ..., pk; `forb` holds neighbors of interior
    // vertices p1..p(k-1), so extensions stay chord-free; a vertex adjacent
    // to v at depth >= 2 must close the cycle there.
    void cycles_through(int v, uint32_t mask, const std::function<void(uint32_t)>& emit) const {
        std::vector<int> path = {v};
        std::function<void(uint32_t, uint32_t)> dfs = [&](uint32_t pathmask, uint32_t forb) {
            int last = path.back();
            uint32_t cand = bg.adj[last] & mask & ~pathmask & ~forb;
            while (cand) {
                int u = std::countr_zero(cand);
                cand &= cand - 1;
                if (path.size() >= 2 && (bg.adj[u] >> v & 1)) {
                    if (path[1] < u) emit(pathmask | (1u << u));
                    continue;
                }
                path.push_back(u);
                dfs(pathmask | (1u << u), path.size() >= 3 ? forb | bg.adj[last] : forb);
                path.pop_back();
            }
        };
        dfs(1u << v, 0);
    }

    int value(uint32_t mask) {
        if (std::popcount(mask) < 3) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(mask);
        int best = value(mask & (mask - 1));
        cycles_through(v, mask, [&](uint32_t cyc) {
            best = std::max(best, 1 + value(mask & ~cyc));
        });
        memo[mask] = best;
        return best;
    }

    // rebuild an optimal family of cycle masks, deterministically
    std::vector<uint32_t> reconstruct(uint32_t mask) {
        std::vector<uint32_t> out;
        while (std::popcount(mask) >= 3) {
            int target = value(mask);
            if (target == 0) break;
            int v = std::countr_zero(mask);
            if (value(mask & (mask - 1)) == target) {
                mask &= mask - 1;
                continue;
            }
            uint32_t chosen = 0;
            cycles_through(v, mask, [&](uint32_t cyc) {
                if (!chosen && 1 + value(mask & ~cyc) == target) chosen = cyc;
            });
            out.push_back(chosen);
            mask &= ~chosen;
        }
        return out;
    }

    // order a cycle mask into a vertex sequence
    std::vector<Vertex> order_cycle(uint32_t cyc) const {
        int start = std::countr_zero(cyc);
        std::vector<Vertex> seq = {start};
        uint32_t left = cyc & ~(1u << start);
        int cur = start;
        while (left) {
            uint32_t nxt = bg.adj[cur] & left;
            int u = std::countr_zero(nxt);
            seq.push_back(u);
            left &= ~(1u << u);
            cur = u;
        }
        return seq;
    }
};

Solution solve_cycle_packing(const Graph& g) {
    BitGraph bg(g);
    CyclePacker packer{bg, {}};
    uint32_t full = (1u << bg.n) - 1;
    int val = packer.value(full);
    Solution sol;
    sol.feasible = true;
    sol.objective = val;
    for (uint32_t cyc : packer.reconstruct(full)) sol.cycles.push_back(packer.order_cycle(cyc));
    sol.provenance = Provenance::Oracle;
    return sol;
}

// ---- max leaf (plain) --------------------------------------------------------

Solution solve_max_leaf(const Graph& g, bool parallel) {
    if (!is_connected(g)) throw std::invalid_argument("max-leaf oracle: disconnected input");
    BitGraph bg(g);
    int n = bg.n;
    uint32_t full = (1u << n) - 1;
    auto feasible = [&](uint32_t leafset) {
        if (leafset == full) return n == 2 && bg.m >= 1;
        uint32_t rest = full & ~leafset;
        if (bg.comps(rest).size() != 1) return false;
        uint32_t f = leafset;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            if (!(bg.adj[v] & rest)) return false;
        }
        return true;
    };
    Best best = scan_subsets(n, false, parallel, feasible);
    Solution sol;
    sol.feasible = best.found;
    if (!best.found) return sol;
    uint32_t L = best.mask;
    // witness tree: BFS tree of the rest, leaves attached to their smallest
    // outside neighbor
    if (L == full) {  // n == 2
        sol.tree = {{0, 1}};
    } else {
        uint32_t rest = full & ~L;
        int root = std::countr_zero(rest);
        uint32_t seen = 1u << root;
        std::vector<int> frontier = {root};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int u : frontier) {
                uint32_t nb = bg.adj[u] & rest & ~seen;
                while (nb) {
                    int v = std::countr_zero(nb);
                    nb &= nb - 1;
                    seen |= 1u << v;
                    sol.tree.emplace_back(u, v);
                    next.push_back(v);
                }
            }
            frontier = std::move(next);
        }
        uint32_t f = L;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            sol.tree.emplace_back(std::countr_zero(bg.adj[v] & rest), v);
        }
    }
    std::vector<int> deg(n, 0);
    for (auto [u, v] : sol.tree) {
        ++deg[u];
        ++deg[v];
    }
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] == 1) sol.leaves.push_back(v);
    sol.objective = static_cast<long long>(sol.leaves.size());
    sol.provenance = Provenance::Oracle;
    return sol;
}

// ---- shared annotated dispatch -------------------------------------------------

Solution brute_force_impl(const AnnotatedInstance& inst, bool parallel) {
    const Graph& g = inst.graph;
    BitGraph bg(g);
    int n = bg.n;
    uint32_t full = (1u << n) - 1;
    uint32_t anchor_mask = 0;
    for (Vertex v : inst.anchors) anchor_mask |= 1u << v;

    Solution sol;
    sol.provenance = Provenance::Oracle;
    Best best;
    switch (inst.tag) {
        case AnnotatedTag::Vc:
            best = scan_subsets(n, true, parallel, [&](uint32_t s) {
                uint32_t out = full & ~s;
                uint32_t f = out;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    if (bg.adj[v] & out) return false;
                }
                return true;
            });
            break;
        case AnnotatedTag::Fvs:
            best = scan_subsets(n, true, parallel,
                                [&](uint32_t s) { return bg.forest(full & ~s); });
            break;
        case AnnotatedTag::DsAnnotated:
            best = scan_subsets(n, true, parallel, [&](uint32_t s) {
                uint32_t f = full & ~s & ~anchor_mask;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    if (!(bg.adj[v] & s)) return false;
                }
                return true;
            });
            break;
        case AnnotatedTag::CvcAnnotated:
            best = scan_subsets(n, true, parallel, [&](uint32_t s) {
                uint32_t out = full & ~s;
                uint32_t f = out;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    if (bg.adj[v] & out) return false;
                }
                auto cs = bg.comps(s);
                if (anchor_mask == 0) return cs.size() <= 1;
                for (uint32_t c : cs)
                    if (!(c & anchor_mask)) return false;
                return true;
            });
            break;
        case AnnotatedTag::MaxleafAnnotated:
            best = scan_subsets(n, false, parallel, [&](uint32_t s) {
                uint32_t f = s & ~anchor_mask;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    if (!(bg.adj[v] & ~s)) return false;
                }
                auto cs = bg.comps(full & ~s);
                if (anchor_mask == 0) return n == 0 || cs.size() == 1;
                for (uint32_t c : cs)
                    if (!(c & anchor_mask & ~s)) return false;
                return true;
            });
            break;
        case AnnotatedTag::PartialVc: {
            if (!inst.budget) throw std::invalid_argument("partial-vc oracle needs a budget");
            long long t = *inst.budget;
            best = scan_subsets(n, true, parallel, [&](uint32_t s) {
                return bg.m - bg.edges_inside(full & ~s) >= t;
            });
            break;
        }
        case AnnotatedTag::CyclePacking:
            return solve_cycle_packing(g);
    }
    sol.feasible = best.found;
    if (best.found) {
        sol.witness = mask_to_vec(best.mask);
        sol.objective = best.size;
    }
    return sol;
}

}  // namespace

Solution brute_force_annotated(const AnnotatedInstance& inst) {
    return brute_force_impl(inst, true);
}

Solution brute_force_annotated_serial(const AnnotatedInstance& inst) {
    return brute_force_impl(inst, false);
}

Solution brute_force(Problem p, const Graph& g, std::optional<long long> budget) {
    switch (p) {
        case Problem::MaxLeaf:
            return solve_max_leaf(g, true);
        case Problem::PartialVertexCover:
            if (!budget) throw std::invalid_argument("partial-vc oracle needs a budget");
            return brute_force_annotated(
                make_instance(AnnotatedTag::PartialVc, g, VertexSet{}, budget));
        default:
            return brute_force_annotated(make_instance(annotated_tag_of(p), g));
    }
}

}  // namespace oracle
}  // namespace eptas
