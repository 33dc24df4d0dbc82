#include "lukfre/candidates.hpp"

#include <algorithm>
#include <string>

#include "lukfre/errors.hpp"

namespace lukfre {

namespace {

void require_potential(const Instance& inst, std::size_t i, std::size_t j,
                       double tol) {
  if (i >= inst.m() || j >= inst.n()) {
    throw IndexError("index (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ") out of range");
  }
  if (inst.a()(i, j) < inst.b()[i] - tol) {
    throw IndexError("column " + std::to_string(j + 1) +
                     " is not in the potential set of row " +
                     std::to_string(i + 1));
  }
}

bool dominates(std::span<const double> y, std::span<const double> x,
               double tol) {
  // y <= x everywhere and strictly below somewhere.
  bool strictly = false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (y[j] > x[j] + tol) return false;
    if (y[j] < x[j] - tol) strictly = true;
  }
  return strictly;
}

}  // namespace

Assignment Assignment::from_one_based(std::span<const std::size_t> columns) {
  std::vector<std::size_t> choices;
  choices.reserve(columns.size());
  for (std::size_t c : columns) {
    choices.push_back(c == 0 ? kUnassigned : c - 1);
  }
  return Assignment(std::move(choices));
}

std::size_t Assignment::assigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(choices_.begin(), choices_.end(),
                    [](std::size_t c) { return c != kUnassigned; }));
}

std::vector<std::size_t> Assignment::to_one_based() const {
  std::vector<std::size_t> out;
  out.reserve(choices_.size());
  for (std::size_t c : choices_) out.push_back(c == kUnassigned ? 0 : c + 1);
  return out;
}

std::vector<double> unit_candidate(std::size_t i, std::size_t j,
                                   const Instance& inst, double tol) {
  require_potential(inst, i, j, tol);
  std::vector<double> out(inst.n(), 0.0);
  out[j] = unit_candidate_value(inst, i, j);
  return out;
}

CandidatePoint assemble_candidate(const Assignment& e, const Instance& inst,
                                  double tol) {
  if (e.size() != inst.m()) {
    throw IndexError("assignment has " + std::to_string(e.size()) +
                     " rows, instance has " + std::to_string(inst.m()));
  }
  CandidatePoint out{std::vector<double>(inst.n(), 0.0), e};
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (!e.assigned(i)) {
      throw IndexError("row " + std::to_string(i + 1) + " is unassigned");
    }
    const std::size_t j = e[i];
    require_potential(inst, i, j, tol);
    out.point[j] = std::max(out.point[j], unit_candidate_value(inst, i, j));
  }
  return out;
}

ProductEnumerator::ProductEnumerator(const std::vector<IndexSet>& sets)
    : sets_(sets), cursor_(sets.size(), 0) {
  done_ = std::any_of(sets.begin(), sets.end(),
                      [](const IndexSet& s) { return s.empty(); });
}

bool ProductEnumerator::next(Assignment& out) {
  if (done_) return false;
  if (started_) {
    // Odometer step, last row fastest.
    std::size_t row = sets_.size();
    while (row > 0) {
      --row;
      if (++cursor_[row] < sets_[row].size()) break;
      cursor_[row] = 0;
      if (row == 0) {
        done_ = true;
        return false;
      }
    }
    if (sets_.empty()) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  if (out.size() != sets_.size()) out = Assignment(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    out.assign(i, sets_[i][cursor_[i]]);
  }
  return true;
}

void enumerate_tight(const IndexSets& sets,
                     const std::function<bool(const Assignment&)>& visit) {
  ProductEnumerator walk(sets.tight);
  Assignment e;
  while (walk.next(e)) {
    if (!visit(e)) return;
  }
}

std::vector<Assignment> enumerate_tight(const IndexSets& sets) {
  std::vector<Assignment> out;
  enumerate_tight(sets, [&](const Assignment& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

MinimalSolutions extract_minimal_solutions(const Instance& inst, double tol) {
  const auto feas = analyze(inst, tol);
  if (!feas.consistent) {
    throw InconsistentError("system has no solution (row " +
                            std::to_string(*feas.violated_row + 1) + ")");
  }

  MinimalSolutions out;
  std::vector<CandidatePoint> distinct;
  enumerate_tight(feas.sets, [&](const Assignment& e) {
    ++out.candidate_count;
    auto candidate = assemble_candidate(e, inst, tol);
    const bool seen = std::any_of(
        distinct.begin(), distinct.end(), [&](const CandidatePoint& p) {
          return all_close(p.point, candidate.point, tol);
        });
    if (!seen) distinct.push_back(std::move(candidate));
    return true;
  });
  out.distinct_count = distinct.size();

  for (std::size_t k = 0; k < distinct.size(); ++k) {
    bool dominated = false;
    for (std::size_t l = 0; l < distinct.size() && !dominated; ++l) {
      if (l != k && dominates(distinct[l].point, distinct[k].point, tol)) {
        dominated = true;
      }
    }
    if (!dominated) out.points.push_back(distinct[k]);
  }
  return out;
}

}  // namespace lukfre
