#ifndef EPTAS_GRAPH_HPP
#define EPTAS_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eptas {

using Vertex = int;

/// Deterministic splitmix64 generator. Used everywhere instead of std
/// distributions so that identical seeds give identical streams on any
/// platform.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) { return next() % bound; }

    // True with probability p.
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class Graph;

/// Induced subgraph together with both id mappings.
struct InducedSubgraph;

/// Simple undirected graph over dense 0-based vertex ids with sorted
/// adjacency lists. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    /// Builds a graph from an edge list. Throws std::invalid_argument on
    /// self-loops, duplicate edges, or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    long long num_edges() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Subgraph induced by `verts` (need not be sorted; duplicates rejected).
    InducedSubgraph induced(const std::vector<Vertex>& verts) const;

private:
    std::vector<std::vector<Vertex>> adj_;
    long long m_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;  // local id -> original id
    std::vector<int> to_local;        // original id -> local id, -1 if absent
};

/// Set of vertex ids of some host graph, kept sorted and unique.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    bool contains(Vertex v) const;
    void insert(Vertex v);
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }

    bool is_subset_of_vertices(const Graph& g) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// ---- instance I/O ----------------------------------------------------------

/// Parses the text instance format: header `p <n> <m>`, edge lines
/// `e <u> <v>` with 1-based endpoints, `c` comment lines. Throws ParseError
/// with a line number on malformed input, self-loops, duplicate edges, or a
/// count mismatch. If `warnings` is non-null, non-fatal notes (such as a
/// violated planarity bound) are appended to it.
Graph load_graph(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph load_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

void save_graph(std::ostream& out, const Graph& g);

// ---- generators ------------------------------------------------------------

/// The (r x r)-grid, r >= 2. Row-major vertex ids.
Graph gen_grid(int r);

/// Triangulated grid: all unit faces get the anti-diagonal so internal
/// vertices reach degree 6, then (unless `corner_join` is false) the
/// degree-2 corner 0 is joined to every external vertex it is not already
/// adjacent to.
Graph gen_gamma(int r, bool corner_join = true);

/// Random stacked triangulation: start from a triangle, repeatedly insert a
/// vertex into a uniformly chosen face and join it to the face's corners.
/// Maximal planar for keep_prob = 1; with keep_prob < 1 each edge is then
/// kept independently with that probability.
Graph gen_stacked_planar(int n, uint64_t seed, double keep_prob = 1.0);

// ---- basic set operations --------------------------------------------------

/// Connected components, ordered by smallest member; each component sorted.
std::vector<VertexSet> components(const Graph& g);

/// Closed ball of radius r around S.
VertexSet ball(const Graph& g, const VertexSet& s, int r);

/// Open neighborhood N(S).
VertexSet neighborhood(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

}  // namespace eptas

#endif
