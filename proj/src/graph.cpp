#include "eptas/graph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace eptas {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }
    g.m_ = static_cast<long long>(edges.size());
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

InducedSubgraph Graph::induced(const std::vector<Vertex>& verts) const {
    InducedSubgraph res;
    res.to_local.assign(num_vertices(), -1);
    res.to_original = verts;
    std::sort(res.to_original.begin(), res.to_original.end());
    if (std::adjacent_find(res.to_original.begin(), res.to_original.end()) != res.to_original.end())
        throw std::invalid_argument("duplicate vertex in induced set");
    for (int i = 0; i < static_cast<int>(res.to_original.size()); ++i) {
        Vertex v = res.to_original[i];
        if (v < 0 || v >= num_vertices()) throw std::invalid_argument("vertex out of range");
        res.to_local[v] = i;
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u : res.to_original)
        for (Vertex v : adj_[u])
            if (u < v && res.to_local[v] >= 0) es.emplace_back(res.to_local[u], res.to_local[v]);
    res.graph = Graph::from_edges(static_cast<int>(res.to_original.size()), es);
    return res;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

bool VertexSet::is_subset_of_vertices(const Graph& g) const {
    return members_.empty() || (members_.front() >= 0 && members_.back() < g.num_vertices());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

// ---- instance I/O ----------------------------------------------------------

Graph load_graph(std::istream& in, std::vector<std::string>* warnings) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed header, expected 'p <n> <m>'");
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail("edge before header");
            long long u, v;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range");
            if (u == v) fail("self-loop");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        fail("unknown line tag '" + tag + "'");
    }
    if (n < 0) throw ParseError("missing 'p <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    Graph g;
    try {
        g = Graph::from_edges(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (warnings && n >= 3 && m > 3 * n - 6)
        warnings->push_back("m > 3n-6: input cannot be planar; guarantees degrade");
    return g;
}

Graph load_graph_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_graph(in, warnings);
}

void save_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

// ---- generators ------------------------------------------------------------

Graph gen_grid(int r) {
    if (r < 2) throw std::invalid_argument("grid requires r >= 2");
    auto id = [r](int i, int j) { return i * r + j; };
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (j + 1 < r) es.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < r) es.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph::from_edges(r * r, es);
}

Graph gen_gamma(int r, bool corner_join) {
    if (r < 2) throw std::invalid_argument("gamma requires r >= 2");
    auto id = [r](int i, int j) { return i * r + j; };
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (j + 1 < r) es.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < r) es.emplace_back(id(i, j), id(i + 1, j));
            // anti-diagonal of each unit face
            if (i + 1 < r && j + 1 < r) es.emplace_back(id(i + 1, j), id(i, j + 1));
        }
    if (corner_join) {
        // corner (0,0) keeps degree 2 under the anti-diagonal orientation
        Graph pre = Graph::from_edges(r * r, es);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                bool external = i == 0 || j == 0 || i == r - 1 || j == r - 1;
                Vertex v = id(i, j);
                if (external && v != 0 && !pre.has_edge(0, v)) es.emplace_back(0, v);
            }
    }
    return Graph::from_edges(r * r, es);
}

Graph gen_stacked_planar(int n, uint64_t seed, double keep_prob) {
    if (n < 3) throw std::invalid_argument("stacked planar requires n >= 3");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> es = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}};
    for (Vertex v = 3; v < n; ++v) {
        size_t f = rng.below(faces.size());
        auto [a, b, c] = faces[f];
        es.emplace_back(v, a);
        es.emplace_back(v, b);
        es.emplace_back(v, c);
        faces[f] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    if (keep_prob < 1.0) {
        std::vector<std::pair<Vertex, Vertex>> kept;
        for (auto& e : es)
            if (rng.chance(keep_prob)) kept.push_back(e);
        es = std::move(kept);
    }
    return Graph::from_edges(n, es);
}

// ---- basic set operations --------------------------------------------------

std::vector<VertexSet> components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(out.size());
        std::vector<Vertex> members;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (Vertex v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

VertexSet ball(const Graph& g, const VertexSet& s, int r) {
    if (!s.is_subset_of_vertices(g)) throw std::invalid_argument("ball: S not within V(G)");
    if (r < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<Vertex> frontier(s.begin(), s.end()), next;
    for (Vertex v : frontier) dist[v] = 0;
    std::vector<Vertex> reached = frontier;
    for (int d = 1; d <= r && !frontier.empty(); ++d) {
        next.clear();
        for (Vertex u : frontier)
            for (Vertex v : g.neighbors(u))
                if (dist[v] < 0) {
                    dist[v] = d;
                    next.push_back(v);
                    reached.push_back(v);
                }
        frontier.swap(next);
    }
    return VertexSet(std::move(reached));
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of_vertices(g)) throw std::invalid_argument("neighborhood: S not within V(G)");
    std::vector<char> in_s(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (Vertex v : s) in_s[v] = 1;
    std::vector<Vertex> out;
    for (Vertex u : s)
        for (Vertex v : g.neighbors(u))
            if (!in_s[v] && !seen[v]) {
                seen[v] = 1;
                out.push_back(v);
            }
    return VertexSet(std::move(out));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_acyclic(const Graph& g) {
    // n - m = number of components exactly when there is no cycle
    return g.num_edges() + static_cast<long long>(components(g).size()) ==
           static_cast<long long>(g.num_vertices());
}

}  // namespace eptas
