#include "lukfre/bnb.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include <json.hpp>

#include "lukfre/errors.hpp"

namespace lukfre {

namespace {

struct Node {
  Assignment partial;
  std::vector<double> point;
  double bound = 0.0;
  std::size_t depth = 0;
  std::size_t column = 0;  // choice made at this node's own row
  std::size_t sequence = 0;
};

// Least bound first; then deeper; then smaller latest column; then
// creation order.
struct LaterInQueue {
  const std::vector<Node>* nodes;
  bool operator()(std::size_t lhs, std::size_t rhs) const {
    const Node& a = (*nodes)[lhs];
    const Node& b = (*nodes)[rhs];
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    if (a.column != b.column) return a.column > b.column;
    return a.sequence > b.sequence;
  }
};

std::vector<std::size_t> row_order(const IndexSets& sets, RowOrder order) {
  std::vector<std::size_t> rows(sets.tight.size());
  std::iota(rows.begin(), rows.end(), 0);
  if (order == RowOrder::ascending_tight) {
    std::stable_sort(rows.begin(), rows.end(),
                     [&](std::size_t lhs, std::size_t rhs) {
                       return sets.tight[lhs].size() < sets.tight[rhs].size();
                     });
  }
  return rows;
}

}  // namespace

const char* to_string(RowOrder order) {
  switch (order) {
    case RowOrder::given:
      return "given";
    case RowOrder::ascending_tight:
      return "ascending-tight";
  }
  return "?";
}

const char* to_string(TraceAction action) {
  switch (action) {
    case TraceAction::expanded:
      return "expanded";
    case TraceAction::pruned:
      return "pruned";
    case TraceAction::incumbent:
      return "incumbent";
  }
  return "?";
}

std::string trace_line(const TraceRecord& record) {
  nlohmann::json assignment = nlohmann::json::array();
  for (std::size_t i = 0; i < record.prefix.size(); ++i) {
    if (record.prefix.assigned(i)) {
      assignment.push_back(record.prefix[i] + 1);
    } else {
      assignment.push_back(nullptr);
    }
  }
  nlohmann::json doc = {{"depth", record.depth},
                        {"assignment", std::move(assignment)},
                        {"bound", record.bound},
                        {"action", to_string(record.action)}};
  return doc.dump();
}

double lower_bound(const Assignment& partial, std::span<const double> c_plus,
                   const Instance& inst) {
  std::vector<double> point(inst.n(), 0.0);
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (!partial.assigned(i)) continue;
    const std::size_t j = partial[i];
    point[j] = std::max(point[j], unit_candidate_value(inst, i, j));
  }
  return dot(c_plus, point);
}

BnbResult solve_z1(const Instance& inst, std::span<const double> c_plus,
                   const IndexSets& sets, const BnbConfig& config,
                   double tol) {
  const std::size_t m = inst.m();
  if (sets.tight.size() != m) {
    throw InconsistentError("tight sets missing; is the system consistent?");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (sets.tight[i].empty()) {
      throw InconsistentError("tight set of row " + std::to_string(i + 1) +
                              " is empty");
    }
  }

  const auto rows = row_order(sets, config.order);
  auto emit = [&](const Node& node, TraceAction action) {
    if (config.trace) {
      config.trace({node.depth, node.partial, node.bound, action});
    }
  };

  BnbResult result;
  bool have_incumbent = false;

  std::vector<Node> nodes;
  nodes.push_back({Assignment(m), std::vector<double>(inst.n(), 0.0), 0.0, 0,
                   0, 0});
  std::priority_queue<std::size_t, std::vector<std::size_t>, LaterInQueue>
      live(LaterInQueue{&nodes});
  live.push(0);

  auto cannot_improve = [&](double bound) {
    return have_incumbent && bound >= result.z1 - tol;
  };

  while (!live.empty()) {
    const std::size_t current = live.top();
    live.pop();
    if (cannot_improve(nodes[current].bound)) {
      ++result.stats.nodes_pruned;
      emit(nodes[current], TraceAction::pruned);
      continue;
    }
    emit(nodes[current], TraceAction::expanded);

    const std::size_t depth = nodes[current].depth + 1;
    const std::size_t row = rows[depth - 1];
    for (std::size_t column : sets.tight[row]) {
      Node child;
      child.partial = nodes[current].partial;
      child.partial.assign(row, column);
      child.point = nodes[current].point;
      child.point[column] = std::max(child.point[column],
                                     unit_candidate_value(inst, row, column));
      child.bound = dot(c_plus, child.point);
      child.depth = depth;
      child.column = column;
      child.sequence = nodes.size();
      ++result.stats.nodes_visited;

      if (depth == m) {
        ++result.stats.paths_completed;
        if (!have_incumbent || child.bound < result.z1) {
          have_incumbent = true;
          result.z1 = child.bound;
          result.e_star = child.partial;
          result.point = child.point;
          ++result.stats.incumbent_updates;
          emit(child, TraceAction::incumbent);
        } else {
          ++result.stats.nodes_pruned;
          emit(child, TraceAction::pruned);
        }
        continue;
      }
      if (cannot_improve(child.bound)) {
        ++result.stats.nodes_pruned;
        emit(child, TraceAction::pruned);
        continue;
      }
      nodes.push_back(std::move(child));
      live.push(nodes.size() - 1);
    }
  }
  return result;
}

}  // namespace lukfre
