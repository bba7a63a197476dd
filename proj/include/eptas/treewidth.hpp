#ifndef EPTAS_TREEWIDTH_HPP
#define EPTAS_TREEWIDTH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eptas/graph.hpp"

namespace eptas {

/// Tree of bags over a graph. Bags are sorted vertex lists; tree_edges
/// connect bag indices.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

struct ValidityReport {
    struct Violation {
        std::string condition;  // "coverage" | "edge-coverage" | "connectivity" | "structure"
        std::string witness;
    };
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks the three decomposition conditions plus tree shape; every
/// violation is reported with a witness.
ValidityReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Min-fill elimination ordering (ties: min degree, then lowest id), bags
/// read off the elimination process. Deterministic.
TreeDecomposition heuristic_decomposition(const Graph& g);

/// Decomposition from an explicit elimination order (used internally and by
/// the exact solver).
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

struct ExactTwResult {
    enum class Status { Found, ExceedsUb, BudgetExceeded };
    Status status = Status::ExceedsUb;
    int width = -1;
    TreeDecomposition td;
    uint64_t nodes_explored = 0;
};

/// Exact treewidth by branch and bound over elimination orderings, with
/// memoized failed states. Intended for n <= ~30; `node_budget` caps the
/// search and a blown budget is reported distinctly from "exceeds ub".
ExactTwResult exact_treewidth(const Graph& g, int ub, uint64_t node_budget = 40'000'000);

/// Rooted nice decomposition: leaves have empty bags, inner nodes introduce
/// or forget one vertex, joins duplicate their bag into two children. Each
/// graph edge is assigned to exactly one introduce node whose bag contains
/// both endpoints; solvers fold an edge's constraint where it is assigned.
struct NiceTreeDecomposition {
    enum class NodeKind : uint8_t { Leaf, Introduce, Forget, Join };
    struct Node {
        NodeKind kind;
        Vertex vertex = -1;  // introduced/forgotten vertex
        int left = -1, right = -1;
        std::vector<Vertex> bag;
        std::vector<std::pair<Vertex, Vertex>> edges;  // edges folded here
    };
    std::vector<Node> nodes;
    int root = -1;

    int width() const {
        int w = -1;
        for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
        return w;
    }
    /// Children-before-parent order.
    std::vector<int> postorder() const;
};

/// Converts a valid decomposition to nice form of the same width.
/// Throws std::invalid_argument if `td` is invalid for `g`.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Weighted balanced tri-partition produced from a tree decomposition.
struct TriPartition {
    VertexSet left, separator, right;
    double w_left = 0, w_sep = 0, w_right = 0;
    int source_node = -1;  // bag the separator was derived from, -1 if synthetic
};

/// Finds (L, S, R) with |S| <= width(td)+1, no L-R edges, every component of
/// G-S of weight <= w(V)/2, and both sides within [W/3, 2W/3] for
/// W = w(V)-w(S) whenever W > 0. Throws on negative weights or an invalid
/// decomposition; throws std::runtime_error if the candidate search is
/// exhausted (not observed on any tested input).
TriPartition balanced_separator(const Graph& g, const TreeDecomposition& td,
                                const std::vector<double>& weights);

// ---- decomposition exchange format ------------------------------------------

/// `s td <#bags> <width+1> <n>` header, `b <id> <v...>` bag lines, then tree
/// edges, all 1-based.
void write_td(std::ostream& out, const TreeDecomposition& td, int n);
TreeDecomposition read_td(std::istream& in, int* n_out = nullptr);

}  // namespace eptas

#endif
