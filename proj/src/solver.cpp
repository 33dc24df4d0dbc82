#include "lukfre/solver.hpp"

#include <algorithm>

namespace lukfre {

using nlohmann::json;

CostSplit split_costs(std::span<const double> c) {
  CostSplit out;
  out.plus.reserve(c.size());
  out.minus.reserve(c.size());
  for (double v : c) {
    out.plus.push_back(std::max(v, 0.0));
    out.minus.push_back(std::min(v, 0.0));
  }
  return out;
}

const char* to_string(Status status) {
  return status == Status::optimal ? "optimal" : "infeasible";
}

SolveReport solve(const Instance& inst, const SolverConfig& config) {
  SolveReport report;
  report.tolerance = config.tol;

  auto feas = analyze(inst, config.tol);
  report.max_solution = feas.max.point;
  report.index_sets = feas.sets;
  if (!feas.consistent) {
    report.status = Status::infeasible;
    report.violated_row = feas.violated_row;
    return report;
  }

  const auto costs = split_costs(inst.c());
  auto z1 = solve_z1(inst, costs.plus, feas.sets, config.bnb, config.tol);

  report.status = Status::optimal;
  report.x_star.resize(inst.n());
  for (std::size_t j = 0; j < inst.n(); ++j) {
    report.x_star[j] =
        inst.c()[j] <= 0.0 ? feas.max.point[j] : z1.point[j];
  }
  report.z1 = z1.z1;
  report.z2 = dot(costs.minus, feas.max.point);
  report.objective = dot(inst.c(), report.x_star);
  report.e_star = std::move(z1.e_star);
  report.stats = z1.stats;
  return report;
}

json to_json(const IndexSets& sets) {
  auto one_based = [](const std::vector<IndexSet>& family) {
    json out = json::array();
    for (const IndexSet& s : family) {
      json row = json::array();
      for (std::size_t j : s) row.push_back(j + 1);
      out.push_back(std::move(row));
    }
    return out;
  };
  return {{"potential", one_based(sets.potential)},
          {"tight", one_based(sets.tight)},
          {"e_cardinality", sets.e_cardinality},
          {"tight_cardinality", sets.tight_cardinality}};
}

json to_json(const BnbStats& stats) {
  return {{"nodes_visited", stats.nodes_visited},
          {"paths_completed", stats.paths_completed},
          {"nodes_pruned", stats.nodes_pruned},
          {"incumbent_updates", stats.incumbent_updates}};
}

json to_json(const SolveReport& report) {
  const bool optimal = report.status == Status::optimal;
  json doc;
  doc["status"] = to_string(report.status);
  doc["x_star"] = optimal ? json(report.x_star) : json(nullptr);
  doc["objective"] = optimal ? json(report.objective) : json(nullptr);
  doc["z1"] = optimal ? json(report.z1) : json(nullptr);
  doc["z2"] = optimal ? json(report.z2) : json(nullptr);
  doc["e_star"] = optimal ? json(report.e_star.to_one_based()) : json(nullptr);
  doc["max_solution"] = report.max_solution;
  doc["index_sets"] = to_json(report.index_sets);
  doc["stats"] = to_json(report.stats);
  doc["tolerance"] = report.tolerance;
  return doc;
}

}  // namespace lukfre
