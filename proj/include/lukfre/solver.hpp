#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "lukfre/bnb.hpp"
#include "lukfre/candidates.hpp"
#include "lukfre/feasibility.hpp"
#include "lukfre/instance.hpp"

namespace lukfre {

struct CostSplit {
  std::vector<double> plus;   // max(c_j, 0)
  std::vector<double> minus;  // min(c_j, 0)
};

CostSplit split_costs(std::span<const double> c);

enum class Status { optimal, infeasible };

const char* to_string(Status status);

struct SolverConfig {
  double tol = kDefaultTolerance;
  BnbConfig bnb;
};

struct SolveReport {
  Status status = Status::infeasible;
  std::vector<double> x_star;
  double objective = 0.0;  // c . x_star
  double z1 = 0.0;         // c+ . X(e_star)
  double z2 = 0.0;         // c- . X_max
  Assignment e_star;
  std::vector<double> max_solution;
  IndexSets index_sets;
  BnbStats stats;
  double tolerance = kDefaultTolerance;
  // First equation the maximum solution misses; set only when infeasible.
  std::optional<std::size_t> violated_row;
};

// Maximum solution, consistency check, index sets, cost split, Z1 by
// branch-and-bound, then x*_j = X_max_j where c_j <= 0 and X(e*)_j where
// c_j > 0.
SolveReport solve(const Instance& inst, const SolverConfig& config = {});

// Field names are part of the external format. Columns are 1-based;
// fields with no value for an infeasible instance are null.
nlohmann::json to_json(const SolveReport& report);

nlohmann::json to_json(const IndexSets& sets);
nlohmann::json to_json(const BnbStats& stats);

}  // namespace lukfre
