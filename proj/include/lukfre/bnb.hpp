#pragma once

// Best-first branch-and-bound for  min c+ . X(e)  over the tight product.
//
// A node fixes the choices of the first d rows (in the configured row
// order); its bound is c+ . (componentwise max of the chosen unit
// candidates), which no completion can undercut since completing only
// raises components and c+ >= 0. Children are scored when created: a
// full-depth child is a completed path and may become the incumbent, any
// other child is pruned or queued. The queue always yields the live node
// of least bound.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lukfre/candidates.hpp"
#include "lukfre/feasibility.hpp"
#include "lukfre/instance.hpp"

namespace lukfre {

enum class RowOrder { given, ascending_tight };

enum class TraceAction { expanded, pruned, incumbent };

const char* to_string(RowOrder order);
const char* to_string(TraceAction action);

struct TraceRecord {
  std::size_t depth = 0;
  Assignment prefix;
  double bound = 0.0;
  TraceAction action = TraceAction::expanded;
};

// {"depth":..,"assignment":[..],"bound":..,"action":".."}, 1-based columns
// with null for unassigned rows.
std::string trace_line(const TraceRecord& record);

struct BnbConfig {
  RowOrder order = RowOrder::given;
  std::function<void(const TraceRecord&)> trace;
};

struct BnbStats {
  std::size_t nodes_visited = 0;  // every created node except the root
  std::size_t paths_completed = 0;
  std::size_t nodes_pruned = 0;
  std::size_t incumbent_updates = 0;
};

struct BnbResult {
  Assignment e_star;
  std::vector<double> point;  // X(e_star)
  double z1 = 0.0;
  BnbStats stats;
};

// c+ . (componentwise max of the unit candidates of the assigned rows).
double lower_bound(const Assignment& partial, std::span<const double> c_plus,
                   const Instance& inst);

// Live nodes with bound >= incumbent - tol are pruned; a completed path
// replaces the incumbent only on strict improvement. Throws
// InconsistentError when a tight set is empty.
BnbResult solve_z1(const Instance& inst, std::span<const double> c_plus,
                   const IndexSets& sets, const BnbConfig& config = {},
                   double tol = kDefaultTolerance);

}  // namespace lukfre
