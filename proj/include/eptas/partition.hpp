#ifndef EPTAS_PARTITION_HPP
#define EPTAS_PARTITION_HPP

#include <vector>

#include "eptas/graph.hpp"

namespace eptas {

/// Class constants for the recursive partitioning step and the quantities
/// derived from them. For the planar profile lambda = 1/2 and beta follows
/// from the grid-minor coefficient.
struct PartitionConstants {
    double epsilon = 0;  // target shrink factor, in (0,1)
    double lambda = 0;   // sublinearity exponent, in (0,1)
    double beta = 0;     // sublinear-treewidth coefficient, >= 0
    double eta = 0;      // modulator target width, >= 0
    double rho = 0;      // min of a^l + (1-a)^l over a in [1/3, 2/3]
    double delta = 0;    // (2e+1)(b+h+1)/(rho-1)
    double gamma = 0;    // (3d/e)^(1/(1-l))
    double tau = 0;      // width bound eta + beta * gamma^lambda
};

/// Evaluates the derived constants. rho is taken in closed form at the
/// interval endpoint; the function a^l + (1-a)^l is concave and symmetric
/// about 1/2, so the minimum sits at a = 1/3. Throws on out-of-range input.
PartitionConstants derive_constants(double epsilon, double lambda, double beta, double eta);

/// beta for the planar profile: from tw(G) <= ((eta+1)/rho_grid) * ceil(sqrt(|X|+1))
/// with the ceiling slack absorbed; rho_grid is the grid-minor coefficient.
double planar_beta(double eta, double rho_grid = 0.2);

struct PartitionReport {
    struct ComponentStat {
        int size = 0;
        int x_overlap = 0;        // |C cap X|
        int boundary = 0;         // |N(C)|
        int heuristic_width = 0;  // width estimate of G[C]
    };
    std::vector<ComponentStat> components;
    int x_size = 0;
    int xprime_size = 0;
    double ratio = 0;  // |X'| / max(1, |X|)
    int recursion_depth = 0;
    int progress_guard_triggers = 0;
    bool base_case = false;  // |X| <= gamma at the top level
};

struct PartitionResult {
    VertexSet x_prime;
    PartitionReport report;
};

/// Recursive partitioning: emits balanced separators (weight = indicator of
/// the current X) until every region holds at most gamma X-vertices. Every
/// component C of G - X' then satisfies |C cap X| <= gamma; |N(C)| <= gamma
/// holds unless the progress guard fired (reported). Throws if X is not a
/// subset of V(G) or gamma < 1.
PartitionResult recursive_partition(const Graph& g, const VertexSet& x, double gamma);

struct ModulatorResult {
    VertexSet x_prime;
    PartitionReport report;
    int width_before = 0;  // heuristic width of G - X
    int width_after = 0;   // heuristic width of G - X'
};

/// Treewidth-modulator shrinking: runs recursive_partition with
/// gamma = constants.gamma (or the override) and reports heuristic widths of
/// G - X and G - X'.
ModulatorResult bounded_tw_modulator(const Graph& g, const VertexSet& x,
                                     const PartitionConstants& constants,
                                     double gamma_override = -1);

}  // namespace eptas

#endif
