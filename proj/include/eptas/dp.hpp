#ifndef EPTAS_DP_HPP
#define EPTAS_DP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eptas/problems.hpp"
#include "eptas/treewidth.hpp"

namespace eptas {

/// Size guards for dp_solve. Bag caps follow the per-family guidelines
/// (subset DPs tolerate more width than partition-state DPs); state_cap
/// bounds any single table.
struct DpBudget {
    int max_bag_subset = 11;       // vc, ds-annotated, partial-vc
    int max_bag_partition = 9;     // fvs, cycle-packing
    int max_bag_connectivity = 8;  // cvc-annotated, maxleaf-annotated
    size_t state_cap = 3'000'000;
};

struct WidthOverBudget : std::runtime_error {
    int width;
    size_t states;
    WidthOverBudget(const std::string& msg, int w, size_t s)
        : std::runtime_error(msg + " (width " + std::to_string(w) + ", states " +
                             std::to_string(s) + ")"),
          width(w),
          states(s) {}
};

struct DpStats {
    size_t peak_states = 0;
    size_t total_states = 0;
    int width = 0;
    int nodes = 0;
};

/// Exact solver for the annotated problem over a nice decomposition of
/// inst.graph. Returns an infeasible Solution when the instance has no
/// feasible set; throws WidthOverBudget when the table guards trip and
/// std::invalid_argument on a decomposition that does not fit the instance.
Solution dp_solve(const AnnotatedInstance& inst, const NiceTreeDecomposition& ntd,
                  const DpBudget& budget = {}, DpStats* stats = nullptr);

struct SelfcheckReport {
    int trials = 0;
    int mismatches = 0;
    std::vector<std::string> details;  // one line per mismatch
};

/// Random-instance harness: for `trials` stacked-planar graphs with at most
/// `size_cap` vertices, solves the tag's standard annotated form on an exact
/// decomposition and on a heuristic one, and compares both against the
/// brute-force oracle (objective equality plus independent witness
/// feasibility).
SelfcheckReport dp_selfcheck(AnnotatedTag tag, int size_cap, int trials, uint64_t seed);

}  // namespace eptas

#endif
