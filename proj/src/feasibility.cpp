#include "lukfre/feasibility.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lukfre/errors.hpp"

namespace lukfre {

std::uint64_t product_cardinality(const std::vector<IndexSet>& sets) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const IndexSet& s : sets) {
    if (s.empty()) return 0;
    if (total > kMax / s.size()) {
      total = kMax;
    } else {
      total *= s.size();
    }
  }
  return total;
}

std::vector<IndexSet> potential_sets(const Instance& inst, double tol) {
  std::vector<IndexSet> sets(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    for (std::size_t j = 0; j < inst.n(); ++j) {
      if (inst.a()(i, j) >= inst.b()[i] - tol) sets[i].push_back(j);
    }
  }
  return sets;
}

MaxSolution max_solution(const Instance& inst) {
  MaxSolution out;
  out.point.assign(inst.n(), 1.0);
  out.row_points.resize(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    auto& row = out.row_points[i];
    row.resize(inst.n());
    for (std::size_t j = 0; j < inst.n(); ++j) {
      row[j] = detail::residuum(inst.a()(i, j), inst.b()[i]);
      out.point[j] = std::min(out.point[j], row[j]);
    }
  }
  return out;
}

std::optional<std::size_t> first_violated_row(const Instance& inst,
                                              std::span<const double> x,
                                              double tol) {
  const auto image = compose(inst.a(), x);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (std::abs(image[i] - inst.b()[i]) > tol) return i;
  }
  return std::nullopt;
}

bool check_consistency(const Instance& inst,
                       std::span<const double> max_point, double tol) {
  return is_feasible(inst, max_point, tol);
}

std::vector<IndexSet> tight_sets(const Instance& inst,
                                 std::span<const double> max_point,
                                 double tol) {
  const auto potential = potential_sets(inst, tol);
  std::vector<IndexSet> tight(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const double b = inst.b()[i];
    for (std::size_t j : potential[i]) {
      if (std::abs(detail::t_norm(inst.a()(i, j), max_point[j]) - b) <= tol) {
        tight[i].push_back(j);
      }
    }
    if (tight[i].empty()) {
      throw InconsistentError("row " + std::to_string(i + 1) +
                              " has no tight column at the maximum solution");
    }
  }
  return tight;
}

FeasibilityAnalysis analyze(const Instance& inst, double tol) {
  FeasibilityAnalysis out;
  out.max = max_solution(inst);
  out.sets.potential = potential_sets(inst, tol);
  out.sets.e_cardinality = product_cardinality(out.sets.potential);

  // An empty J_i means b_i > a_ij for every j, so even x = 1 leaves row i
  // short of b_i.
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (out.sets.potential[i].empty()) {
      out.violated_row = i;
      return out;
    }
  }
  out.violated_row = first_violated_row(inst, out.max.point, tol);
  if (out.violated_row) return out;

  out.consistent = true;
  out.sets.tight = tight_sets(inst, out.max.point, tol);
  out.sets.tight_cardinality = product_cardinality(out.sets.tight);
  return out;
}

}  // namespace lukfre
