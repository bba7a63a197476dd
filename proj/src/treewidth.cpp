#include "eptas/treewidth.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace eptas {

ValidityReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    ValidityReport rep;
    int nb = static_cast<int>(td.bags.size());
    for (const auto& bag : td.bags)
        for (Vertex v : bag)
            if (v < 0 || v >= g.num_vertices())
                throw std::invalid_argument("bag references vertex outside G");

    // tree shape: nb-1 edges, connected, endpoints in range
    if (nb == 0) {
        rep.violations.push_back({"structure", "no bags"});
        return rep;
    }
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || a >= nb || b < 0 || b >= nb) {
            rep.violations.push_back({"structure", "tree edge endpoint out of range"});
            return rep;
        }
    if (static_cast<int>(td.tree_edges.size()) != nb - 1)
        rep.violations.push_back({"structure", "tree must have #bags-1 edges"});
    std::vector<std::vector<int>> tadj(nb);
    for (auto [a, b] : td.tree_edges) {
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    {
        std::vector<char> seen(nb, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int v : tadj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        if (cnt != nb) rep.violations.push_back({"structure", "tree is disconnected"});
    }
    if (!rep.violations.empty()) return rep;

    // vertex coverage
    std::vector<char> covered(g.num_vertices(), 0);
    for (const auto& bag : td.bags)
        for (Vertex v : bag) covered[v] = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!covered[v]) {
            rep.violations.push_back({"coverage", "vertex " + std::to_string(v + 1) + " in no bag"});
            break;
        }

    // edge coverage
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const auto& bag : td.bags) {
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            rep.violations.push_back({"edge-coverage", "edge " + std::to_string(u + 1) + "-" +
                                                           std::to_string(v + 1) + " in no bag"});
            break;
        }
    }

    // connected subtrees
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> holders;
        for (int i = 0; i < nb; ++i)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) holders.push_back(i);
        if (holders.empty()) continue;  // already reported as coverage
        std::vector<char> in_h(nb, 0), seen(nb, 0);
        for (int i : holders) in_h[i] = 1;
        std::vector<int> stack = {holders[0]};
        seen[holders[0]] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++cnt;
            for (int w : tadj[u])
                if (in_h[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (cnt != static_cast<int>(holders.size())) {
            rep.violations.push_back(
                {"connectivity", "bags of vertex " + std::to_string(v + 1) + " are disconnected"});
            break;
        }
    }
    return rep;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    int n = g.num_vertices();
    if (n == 0) return TreeDecomposition{{{}}, {}};
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // simulate elimination with fill-in
    std::vector<std::unordered_set<Vertex>> adj(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) adj[u].insert(v);
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<int> bag_of(n);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> later;
        for (Vertex u : adj[v])
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b) {
                adj[later[a]].insert(later[b]);
                adj[later[b]].insert(later[a]);
            }
        std::vector<Vertex> bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = std::move(bag);
        bag_of[v] = i;
    }
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        // parent bag: the earliest-eliminated later neighbor, else next in order
        int parent = -1;
        for (Vertex u : td.bags[i])
            if (u != v && (parent < 0 || pos[u] < parent)) parent = pos[u];
        if (parent < 0 && i + 1 < n) parent = i + 1;
        if (parent >= 0) td.tree_edges.emplace_back(i, parent);
    }
    return td;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return TreeDecomposition{{{}}, {}};
    std::vector<std::unordered_set<Vertex>> adj(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) adj[u].insert(v);
    std::vector<char> gone(n, 0);
    std::vector<long long> fill(n, 0);
    auto compute_fill = [&](Vertex v) {
        std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
        long long f = 0;
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b)
                if (!adj[nb[a]].count(nb[b])) ++f;
        return f;
    };
    for (Vertex v = 0; v < n; ++v) fill[v] = compute_fill(v);

    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            if (best < 0 || fill[v] < fill[best] ||
                (fill[v] == fill[best] && adj[v].size() < adj[best].size()))
                best = v;
        }
        order.push_back(best);
        gone[best] = 1;
        std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
        std::sort(nb.begin(), nb.end());
        // make neighborhood a clique, remove best, recompute affected fills
        std::unordered_set<Vertex> affected(nb.begin(), nb.end());
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b)
                if (!adj[nb[a]].count(nb[b])) {
                    adj[nb[a]].insert(nb[b]);
                    adj[nb[b]].insert(nb[a]);
                    for (Vertex x : adj[nb[a]]) affected.insert(x);
                    for (Vertex x : adj[nb[b]]) affected.insert(x);
                }
        for (Vertex u : nb) {
            adj[u].erase(best);
            for (Vertex x : adj[u]) affected.insert(x);
        }
        adj[best].clear();
        for (Vertex v : affected)
            if (!gone[v]) fill[v] = compute_fill(v);
    }
    return decomposition_from_order(g, order);
}

// ---- nice form ---------------------------------------------------------------

std::vector<int> NiceTreeDecomposition::postorder() const {
    std::vector<int> out;
    out.reserve(nodes.size());
    // iterative DFS
    std::vector<std::pair<int, int>> stack = {{root, 0}};
    while (!stack.empty()) {
        auto& [u, phase] = stack.back();
        const Node& nd = nodes[u];
        if (phase == 0) {
            phase = 1;
            if (nd.left >= 0) {
                stack.push_back({nd.left, 0});
                continue;
            }
        }
        if (phase == 1) {
            phase = 2;
            if (nd.right >= 0) {
                stack.push_back({nd.right, 0});
                continue;
            }
        }
        out.push_back(u);
        stack.pop_back();
    }
    return out;
}

namespace {

struct NiceBuilder {
    NiceTreeDecomposition out;

    int add(NiceTreeDecomposition::NodeKind kind, Vertex v, int left, int right,
            std::vector<Vertex> bag) {
        out.nodes.push_back({kind, v, left, right, std::move(bag), {}});
        return static_cast<int>(out.nodes.size()) - 1;
    }

    // chain from an empty leaf up to `bag` via introduces
    int leaf_chain(const std::vector<Vertex>& bag) {
        int cur = add(NiceTreeDecomposition::NodeKind::Leaf, -1, -1, -1, {});
        std::vector<Vertex> acc;
        for (Vertex v : bag) {
            acc.push_back(v);
            cur = add(NiceTreeDecomposition::NodeKind::Introduce, v, cur, -1, acc);
        }
        return cur;
    }

    // transform node `cur` with bag `from` into bag `to`: forget from\to, then
    // introduce to\from
    int morph(int cur, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> acc = from;
        for (Vertex v : from) {
            if (std::binary_search(to.begin(), to.end(), v)) continue;
            acc.erase(std::find(acc.begin(), acc.end(), v));
            cur = add(NiceTreeDecomposition::NodeKind::Forget, v, cur, -1, acc);
        }
        for (Vertex v : to) {
            if (std::binary_search(from.begin(), from.end(), v)) continue;
            acc.insert(std::lower_bound(acc.begin(), acc.end(), v), v);
            cur = add(NiceTreeDecomposition::NodeKind::Introduce, v, cur, -1, acc);
        }
        return cur;
    }
};

}  // namespace

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
    auto rep = validate_decomposition(g, td);
    if (!rep.valid())
        throw std::invalid_argument("make_nice: invalid decomposition (" +
                                    rep.violations.front().condition + ": " +
                                    rep.violations.front().witness + ")");
    int nb = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> tadj(nb);
    for (auto [a, b] : td.tree_edges) {
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    NiceBuilder nb_;

    // build bottom-up from root 0 via explicit recursion stack
    struct Frame {
        int node, parent;
        size_t child_idx = 0;
        std::vector<int> built_children;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0, {}});
    int built_root = -1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        std::vector<int> children;
        for (int c : tadj[f.node])
            if (c != f.parent) children.push_back(c);
        if (f.child_idx < children.size()) {
            int c = children[f.child_idx++];
            stack.push_back({c, f.node, 0, {}});
            continue;
        }
        // all children built: each built child currently has bag == its own td
        // bag; morph each to this node's bag, then join pairwise
        const auto& bag = td.bags[f.node];
        std::vector<int> parts;
        for (size_t i = 0; i < children.size(); ++i)
            parts.push_back(nb_.morph(f.built_children[i], td.bags[children[i]], bag));
        int cur;
        if (parts.empty()) {
            cur = nb_.leaf_chain(bag);
        } else {
            cur = parts[0];
            for (size_t i = 1; i < parts.size(); ++i)
                cur = nb_.add(NiceTreeDecomposition::NodeKind::Join, -1, cur, parts[i], bag);
        }
        int done = cur;
        stack.pop_back();
        if (stack.empty()) {
            built_root = done;
        } else {
            stack.back().built_children.push_back(done);
        }
    }
    // forget everything above the old root
    {
        std::vector<Vertex> acc = td.bags[0];
        int cur = built_root;
        while (!acc.empty()) {
            Vertex v = acc.back();
            acc.pop_back();
            cur = nb_.add(NiceTreeDecomposition::NodeKind::Forget, v, cur, -1, acc);
        }
        built_root = cur;
    }
    nb_.out.root = built_root;

    // assign every edge to the first introduce node (in root-first preorder)
    // whose bag contains both endpoints and which introduces one of them
    auto& nodes = nb_.out.nodes;
    std::vector<int> pre;
    {
        std::vector<int> st = {nb_.out.root};
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            pre.push_back(u);
            if (nodes[u].right >= 0) st.push_back(nodes[u].right);
            if (nodes[u].left >= 0) st.push_back(nodes[u].left);
        }
    }
    std::vector<std::vector<char>> assigned(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        assigned[v].assign(g.neighbors(v).size(), 0);
    auto edge_slot = [&](Vertex u, Vertex v) -> char& {
        auto nbs = g.neighbors(u);
        size_t idx = std::lower_bound(nbs.begin(), nbs.end(), v) - nbs.begin();
        return assigned[u][idx];
    };
    long long assigned_count = 0;
    for (int id : pre) {
        auto& nd = nodes[id];
        if (nd.kind != NiceTreeDecomposition::NodeKind::Introduce) continue;
        Vertex v = nd.vertex;
        for (Vertex u : g.neighbors(v)) {
            if (!std::binary_search(nd.bag.begin(), nd.bag.end(), u)) continue;
            if (edge_slot(std::min(u, v), std::max(u, v))) continue;
            edge_slot(std::min(u, v), std::max(u, v)) = 1;
            nd.edges.emplace_back(std::min(u, v), std::max(u, v));
            ++assigned_count;
        }
    }
    if (assigned_count != g.num_edges())
        throw std::logic_error("make_nice: edge assignment incomplete");
    return nb_.out;
}

// ---- exchange format ---------------------------------------------------------

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << n << "\n";
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
}

TreeDecomposition read_td(std::istream& in, int* n_out) {
    TreeDecomposition td;
    std::string line;
    int lineno = 0;
    long long nbags = -1;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "s") {
            std::string td_tag;
            long long widthp1, n;
            if (!(ls >> td_tag >> nbags >> widthp1 >> n) || td_tag != "td")
                fail("malformed 's td' header");
            td.bags.resize(nbags);
            if (n_out) *n_out = static_cast<int>(n);
            continue;
        }
        if (tag == "b") {
            long long id;
            if (!(ls >> id) || id < 1 || id > nbags) fail("bad bag id");
            long long v;
            std::vector<Vertex> bag;
            while (ls >> v) bag.push_back(static_cast<Vertex>(v - 1));
            std::sort(bag.begin(), bag.end());
            td.bags[id - 1] = std::move(bag);
            continue;
        }
        // tree edge line
        std::istringstream es(line);
        long long a, b;
        if (!(es >> a >> b) || a < 1 || b < 1 || a > nbags || b > nbags) fail("bad tree edge");
        td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (nbags < 0) throw ParseError("missing 's td' header");
    return td;
}

}  // namespace eptas
