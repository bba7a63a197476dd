#ifndef EPTAS_EPTAS_HPP
#define EPTAS_EPTAS_HPP

#include <optional>
#include <string>

#include "eptas/partition.hpp"
#include "eptas/problems.hpp"

namespace eptas {

/// Deletes X and annotates the rest: the graph becomes G - X, and for the
/// domination/connectivity problems the anchor set R = N(X) records where X
/// used to touch. Identity-free problems (vc, fvs, cycle packing) get R = {}.
AnnotatedInstance reduce(Problem p, const Graph& g, const VertexSet& x);

/// Turns a feasible annotated solution on G - X back into a feasible
/// solution on G, losing only an additive term linear in |X|. Throws
/// std::logic_error if the lifted witness fails its feasibility predicate.
Solution lift(Problem p, const Graph& g, const VertexSet& x, const AnnotatedInstance& inst,
              const Solution& sol_prime);

struct EptasOptions {
    double lambda = 0.5;                    // planar profile
    double rho_grid = 0.2;                  // grid-minor coefficient
    std::optional<double> beta;             // default: planar_beta(eta, rho_grid)
    std::optional<double> gamma;            // override; forfeits the guarantee
    std::optional<int> eta;                 // override the transversal's width target
    std::optional<VertexSet> transversal;   // user-supplied X (required for ds)
    int retry_cap = 5;
};

struct StageStats {
    int transversal_size = 0;
    int modulator_size = 0;
    int width = 0;  // width of the decomposition handed to the DP
    size_t dp_states = 0;
    int width_g_minus_x = -1;
    int retries = 0;
    int progress_guard_triggers = 0;
    double gamma_used = 0;
    double t_transversal_ms = 0, t_modulator_ms = 0, t_reduce_ms = 0, t_decompose_ms = 0,
           t_dp_ms = 0, t_lift_ms = 0;
};

struct EptasResult {
    Solution solution;
    StageStats stats;
    std::string guarantee;  // "paper-constants" | "override-no-guarantee"
    double epsilon = 0;
    double epsilon_inner = 0;
    int eta = 0;
    PartitionConstants constants;
};

/// The full pipeline: transversal, modulator shrinking, reduce, decompose,
/// exact annotated DP, lift, verify. epsilon is accepted in (0, 1]. On a
/// width-over-budget DP the driver halves gamma and retries up to
/// options.retry_cap times before rethrowing.
EptasResult eptas_solve(Problem p, const Graph& g, double epsilon,
                        const EptasOptions& options = {});

}  // namespace eptas

#endif
