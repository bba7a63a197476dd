#ifndef EPTAS_ORACLE_HPP
#define EPTAS_ORACLE_HPP

#include <optional>

#include "eptas/problems.hpp"

namespace eptas {
namespace oracle {

/// Exhaustive exact solver for annotated instances, n <= 16. Subset-scan
/// problems run the scan in OpenMP chunks; results are merged in chunk order
/// and identical to the serial reference. Minimization witnesses are the
/// lexicographically smallest optimal sets.
Solution brute_force_annotated(const AnnotatedInstance& inst);

/// Single-threaded reference implementation with identical results.
Solution brute_force_annotated_serial(const AnnotatedInstance& inst);

/// Exact solver for the plain problems. Throws std::invalid_argument when
/// n > 16, when partial-vc lacks a budget, or for max-leaf on a disconnected
/// graph.
Solution brute_force(Problem p, const Graph& g,
                     std::optional<long long> budget = std::nullopt);

}  // namespace oracle
}  // namespace eptas

#endif
