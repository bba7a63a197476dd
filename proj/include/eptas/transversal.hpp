#ifndef EPTAS_TRANSVERSAL_HPP
#define EPTAS_TRANSVERSAL_HPP

#include "eptas/problems.hpp"

namespace eptas {

/// Endpoints of a greedy maximal matching (edges scanned in sorted order).
/// G - X is edgeless and |X| <= 2 opt(vertex cover).
VertexSet vc_matching_transversal(const Graph& g);

/// Local-ratio 2-approximate feedback vertex set with reverse-delete;
/// G - X is acyclic.
VertexSet fvs_2approx(const Graph& g);

/// All vertices of degree >= 3; the rest has max degree 2. Throws on a
/// disconnected graph.
VertexSet maxleaf_transversal(const Graph& g);

struct EtaTransversalResult {
    VertexSet x;
    bool fallback_used = false;  // enumeration exhausted, finished with fvs_2approx
    int iterations = 0;
};

/// Generic transversal search at eta = 1: enumerate candidate separators Z up
/// to gamma_cap, peel off a cyclic component solved exactly by the feedback
/// vertex set DP, repeat. Exponential in gamma_cap; gated to gamma_cap <= 2.
EtaTransversalResult eta_transversal_approx(const Graph& g, int gamma_cap);

struct TransversalResult {
    VertexSet x;
    int eta = 0;
};

/// Problem dispatch. Throws std::invalid_argument for problems without a
/// built-in construction (dominating set and partial vertex cover take a
/// user-supplied set).
TransversalResult build_transversal(Problem p, const Graph& g);

}  // namespace eptas

#endif
