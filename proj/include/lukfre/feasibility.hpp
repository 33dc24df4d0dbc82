#pragma once

// Maximum solution, consistency test and the per-row index sets.
//
// All column indices are 0-based internally; reports convert to 1-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lukfre/algebra.hpp"
#include "lukfre/instance.hpp"

namespace lukfre {

// Sorted column indices.
using IndexSet = std::vector<std::size_t>;

// Product of set sizes, saturating at UINT64_MAX.
std::uint64_t product_cardinality(const std::vector<IndexSet>& sets);

struct IndexSets {
  std::vector<IndexSet> potential;  // J_i = {j : a_ij >= b_i}
  std::vector<IndexSet> tight;      // columns of J_i where X_max is tight
  std::uint64_t e_cardinality = 0;
  std::uint64_t tight_cardinality = 0;
};

struct MaxSolution {
  std::vector<double> point;                    // componentwise min of rows
  std::vector<std::vector<double>> row_points;  // residuum(a_ij, b_i) per row
};

// Ties a_ij == b_i are members; comparison is a_ij >= b_i - tol.
std::vector<IndexSet> potential_sets(const Instance& inst,
                                     double tol = kDefaultTolerance);

MaxSolution max_solution(const Instance& inst);

// First row i with |compose(A, x)_i - b_i| > tol, if any.
std::optional<std::size_t> first_violated_row(const Instance& inst,
                                              std::span<const double> x,
                                              double tol = kDefaultTolerance);

inline bool is_feasible(const Instance& inst, std::span<const double> x,
                        double tol = kDefaultTolerance) {
  return !first_violated_row(inst, x, tol).has_value();
}

// True iff the maximum solution satisfies every equation within tol.
bool check_consistency(const Instance& inst,
                       std::span<const double> max_point,
                       double tol = kDefaultTolerance);

// Columns j in J_i with |t_norm(a_ij, X_j) - b_i| <= tol. Throws
// InconsistentError if some row ends up empty.
std::vector<IndexSet> tight_sets(const Instance& inst,
                                 std::span<const double> max_point,
                                 double tol = kDefaultTolerance);

// Steps 1-3 in one pass. When the system is inconsistent, `sets.tight` is
// empty and `violated_row` names the first failing equation.
struct FeasibilityAnalysis {
  MaxSolution max;
  bool consistent = false;
  std::optional<std::size_t> violated_row;
  IndexSets sets;
};

FeasibilityAnalysis analyze(const Instance& inst,
                            double tol = kDefaultTolerance);

}  // namespace lukfre
