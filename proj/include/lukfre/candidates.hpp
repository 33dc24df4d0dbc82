#pragma once

// Unit candidates, assembled candidates X(e) and the restricted
// assignment set (the product of the tight sets).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "lukfre/feasibility.hpp"
#include "lukfre/instance.hpp"

namespace lukfre {

inline constexpr std::size_t kUnassigned =
    std::numeric_limits<std::size_t>::max();

// One column choice per equation row; rows may be left unassigned while a
// search is in progress.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t rows) : choices_(rows, kUnassigned) {}
  explicit Assignment(std::vector<std::size_t> choices)
      : choices_(std::move(choices)) {}

  // From 1-based column numbers, as printed in reports.
  static Assignment from_one_based(std::span<const std::size_t> columns);

  std::size_t size() const { return choices_.size(); }
  std::size_t operator[](std::size_t row) const { return choices_[row]; }
  void assign(std::size_t row, std::size_t column) { choices_[row] = column; }
  bool assigned(std::size_t row) const {
    return choices_[row] != kUnassigned;
  }
  std::size_t assigned_count() const;
  bool complete() const { return assigned_count() == size(); }

  const std::vector<std::size_t>& choices() const { return choices_; }
  // 1-based columns; unassigned rows map to 0.
  std::vector<std::size_t> to_one_based() const;

  auto operator<=>(const Assignment&) const = default;

 private:
  std::vector<std::size_t> choices_;
};

struct CandidatePoint {
  std::vector<double> point;
  Assignment origin;
};

// b_i + 1 - a_ij, or 0 when b_i == 0. No membership check.
inline double unit_candidate_value(const Instance& inst, std::size_t i,
                                   std::size_t j) {
  const double b = inst.b()[i];
  return b == 0.0 ? 0.0 : b + 1.0 - inst.a()(i, j);
}

// The vector that is unit_candidate_value(i, j) at column j and zero
// elsewhere. Throws IndexError unless j is in J_i.
std::vector<double> unit_candidate(std::size_t i, std::size_t j,
                                   const Instance& inst,
                                   double tol = kDefaultTolerance);

// Componentwise max of the rows' unit candidates. Throws IndexError for a
// partial assignment or a choice outside J_i.
CandidatePoint assemble_candidate(const Assignment& e, const Instance& inst,
                                  double tol = kDefaultTolerance);

// Lexicographic walk over S_1 x ... x S_m; row 1 is most significant and
// columns ascend within a row. Yields nothing if some factor is empty.
class ProductEnumerator {
 public:
  explicit ProductEnumerator(const std::vector<IndexSet>& sets);

  // Writes the next assignment into `out`; returns false when exhausted.
  bool next(Assignment& out);

 private:
  const std::vector<IndexSet>& sets_;
  std::vector<std::size_t> cursor_;
  bool started_ = false;
  bool done_ = false;
};

// Visits every member of the product of the tight sets in lexicographic
// order. Returning false from `visit` stops the walk.
void enumerate_tight(const IndexSets& sets,
                     const std::function<bool(const Assignment&)>& visit);

std::vector<Assignment> enumerate_tight(const IndexSets& sets);

struct MinimalSolutions {
  std::vector<CandidatePoint> points;  // pairwise-minimal, distinct
  std::uint64_t candidate_count = 0;   // |product of tight sets|
  std::size_t distinct_count = 0;      // after deduplication
};

// All X(e) over the tight product, deduplicated within tol, then reduced
// to the points not dominated by another retained point. Points are
// returned in order of first appearance. Throws InconsistentError for an
// inconsistent instance.
MinimalSolutions extract_minimal_solutions(const Instance& inst,
                                           double tol = kDefaultTolerance);

}  // namespace lukfre
