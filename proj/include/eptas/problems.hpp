#ifndef EPTAS_PROBLEMS_HPP
#define EPTAS_PROBLEMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eptas/graph.hpp"

namespace eptas {

enum class Problem {
    VertexCover,
    ConnectedVertexCover,
    FeedbackVertexSet,
    CyclePacking,
    DominatingSet,
    MaxLeaf,
    PartialVertexCover,
};

/// Annotated problem tags solved by the tree-decomposition DP. The anchor
/// set R records the influence of a deleted vertex set; R = {} makes the
/// connectivity-flavored tags collapse to their unreduced versions (a single
/// component instead of R-anchored components).
enum class AnnotatedTag {
    Vc,
    Fvs,
    CyclePacking,
    CvcAnnotated,
    DsAnnotated,
    MaxleafAnnotated,
    PartialVc,
};

std::string to_string(Problem p);
std::string to_string(AnnotatedTag t);
std::optional<Problem> problem_from_string(const std::string& s);

/// True for problems whose objective is minimized.
bool is_minimization(AnnotatedTag t);
bool is_minimization(Problem p);

AnnotatedTag annotated_tag_of(Problem p);

struct AnnotatedInstance {
    AnnotatedTag tag;
    Graph graph;
    VertexSet anchors;                    // R
    std::optional<long long> budget;      // partial-vc only
    std::vector<Vertex> to_original;      // lift mapping; empty = identity
};

/// Makes an annotated instance over the full graph (identity mapping).
AnnotatedInstance make_instance(AnnotatedTag tag, Graph g, VertexSet anchors = {},
                                std::optional<long long> budget = std::nullopt);

enum class Provenance { Oracle, Dp, Eptas };

struct Solution {
    bool feasible = false;
    long long objective = -1;
    std::vector<Vertex> witness;                   // vertex-set problems
    std::vector<std::vector<Vertex>> cycles;       // cycle packing
    std::vector<std::pair<Vertex, Vertex>> tree;   // max leaf: spanning tree edges
    std::vector<Vertex> leaves;                    // max leaf: leaf set
    Provenance provenance = Provenance::Oracle;
};

// ---- feasibility predicates --------------------------------------------------
// These recompute feasibility from scratch; solvers never share state with
// them.

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& s);
bool is_feedback_vertex_set(const Graph& g, const std::vector<Vertex>& s);
bool is_dominating_set_annotated(const Graph& g, const VertexSet& anchors,
                                 const std::vector<Vertex>& s);
bool is_cvc_annotated(const Graph& g, const VertexSet& anchors, const std::vector<Vertex>& s);
bool is_maxleaf_annotated(const Graph& g, const VertexSet& anchors, const std::vector<Vertex>& s);
bool covers_at_least(const Graph& g, const std::vector<Vertex>& s, long long t);
bool is_cycle_packing(const Graph& g, const std::vector<std::vector<Vertex>>& cycles);
bool is_spanning_tree(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& tree);

/// Checks a solution against an annotated instance, including the objective
/// value's consistency with the witness.
bool check_annotated(const AnnotatedInstance& inst, const Solution& sol);

/// Checks a lifted solution against the original (plain) problem.
bool check_plain(Problem p, const Graph& g, const Solution& sol,
                 std::optional<long long> budget = std::nullopt);

}  // namespace eptas

#endif
