#include "lukfre/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lukfre/errors.hpp"
#include "lukfre/feasibility.hpp"
#include "lukfre/solver.hpp"

namespace lukfre {

using nlohmann::json;

namespace {

// X(e) rebuilt directly: per row, b_i + 1 - a_ij at column e(i) unless
// b_i == 0, then the componentwise max.
std::vector<double> direct_candidate(const Instance& inst,
                                              const std::vector<std::size_t>& e) {
  std::vector<double> x(inst.n(), 0.0);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const double b = inst.b()[i];
    if (b == 0.0) continue;
    const std::size_t j = e[i];
    x[j] = std::max(x[j], b + 1.0 - inst.a()(i, j));
  }
  return x;
}

// Nested loops over S_1 x ... x S_m, row 1 outermost.
void for_each_product(const std::vector<IndexSet>& sets,
                      const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> e(sets.size());
  std::function<void(std::size_t)> level = [&](std::size_t row) {
    if (row == sets.size()) {
      fn(e);
      return;
    }
    for (std::size_t j : sets[row]) {
      e[row] = j;
      level(row + 1);
    }
  };
  level(0);
}

bool in_product(const std::vector<IndexSet>& sets,
                const std::vector<std::size_t>& e) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!std::binary_search(sets[i].begin(), sets[i].end(), e[i])) {
      return false;
    }
  }
  return true;
}

json one_based(const std::vector<std::size_t>& e) {
  json out = json::array();
  for (std::size_t j : e) out.push_back(j + 1);
  return out;
}

std::string describe(const std::vector<double>& x) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t j = 0; j < x.size(); ++j) os << (j ? ", " : "") << x[j];
  os << ']';
  return os.str();
}

}  // namespace

OracleZ1 brute_force_z1(const Instance& inst, std::span<const double> c_plus,
                        double tol, std::uint64_t cap) {
  const auto feas = analyze(inst, tol);
  if (!feas.consistent || feas.sets.tight_cardinality == 0) {
    throw InconsistentError("no candidate assignments: system is inconsistent");
  }
  if (feas.sets.tight_cardinality > cap) {
    throw CapExceededError("tight product has " +
                           std::to_string(feas.sets.tight_cardinality) +
                           " members, cap is " + std::to_string(cap));
  }
  OracleZ1 best;
  bool have = false;
  for_each_product(feas.sets.tight, [&](const std::vector<std::size_t>& e) {
    const double z = dot(c_plus, direct_candidate(inst, e));
    if (!have || z < best.z1) {
      have = true;
      best.z1 = z;
      best.e = Assignment(e);
    }
  });
  return best;
}

std::vector<FeasibleSample> sample_feasible(const Instance& inst,
                                            std::size_t count,
                                            std::uint64_t seed, double tol) {
  std::vector<FeasibleSample> out;
  if (count == 0) return out;
  const auto feas = analyze(inst, tol);
  if (!feas.consistent) {
    throw InconsistentError("cannot sample an empty feasible region");
  }
  const auto& upper = feas.max.point;
  UniformStream rng(seed);
  out.reserve(count);
  std::vector<std::size_t> e(inst.m());
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < inst.m(); ++i) {
      const auto& choices = feas.sets.tight[i];
      e[i] = choices[rng.index(choices.size())];
    }
    const auto lower = direct_candidate(inst, e);
    std::vector<double> x(inst.n());
    for (std::size_t j = 0; j < inst.n(); ++j) {
      x[j] = lower[j] == upper[j] ? lower[j]
                                  : rng.next(lower[j], upper[j]);
    }
    if (auto row = first_violated_row(inst, x, tol)) {
      throw AuditFailure("sampled point " + describe(x) +
                         " violates equation " + std::to_string(*row + 1));
    }
    out.push_back({std::move(x), Assignment(e)});
  }
  return out;
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AuditCheck& c) { return c.passed; });
}

const AuditCheck* AuditReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AuditReport property_audit(const Instance& inst, double tol,
                           const AuditOptions& options) {
  AuditReport report;
  report.instance_name = inst.name();
  const auto feas = analyze(inst, tol);
  report.e_cardinality = feas.sets.e_cardinality;
  report.tight_cardinality = feas.sets.tight_cardinality;
  report.consistent = feas.consistent;
  if (!feas.consistent) {
    report.notes.push_back("inconsistent system: equation " +
                           std::to_string(*feas.violated_row + 1) +
                           " cannot be met; candidate checks skipped");
    return report;
  }
  const auto& upper = feas.max.point;

  if (report.tight_cardinality > options.cap) {
    report.notes.push_back("tight product exceeds the enumeration cap; "
                           "candidate checks skipped");
    return report;
  }

  AuditCheck below{"candidates_below_max", true, nullptr};
  AuditCheck feasible{"candidates_feasible", true, nullptr};
  std::uint64_t tight_count = 0;
  for_each_product(feas.sets.tight, [&](const std::vector<std::size_t>& e) {
    ++tight_count;
    const auto x = direct_candidate(inst, e);
    if (below.passed && !leq(x, upper, tol)) {
      below.passed = false;
      below.witness = {{"e", one_based(e)}, {"point", x}, {"max", upper}};
    }
    if (feasible.passed) {
      if (auto row = first_violated_row(inst, x, tol)) {
        feasible.passed = false;
        feasible.witness = {{"e", one_based(e)},
                            {"point", x},
                            {"row", *row + 1}};
      }
    }
  });
  report.checks.push_back(std::move(below));
  report.checks.push_back(std::move(feasible));

  AuditCheck tight_card{"cardinality_tight", true, nullptr};
  if (tight_count != report.tight_cardinality) {
    tight_card.passed = false;
    tight_card.witness = {{"counted", tight_count},
                          {"product", report.tight_cardinality}};
  }
  report.checks.push_back(std::move(tight_card));

  if (report.e_cardinality <= options.full_e_limit || options.force_full_e) {
    AuditCheck complement{"complement_infeasible", true, nullptr};
    AuditCheck potential_card{"cardinality_potential", true, nullptr};
    std::uint64_t count = 0;
    for_each_product(feas.sets.potential,
                     [&](const std::vector<std::size_t>& e) {
                       ++count;
                       if (!complement.passed || in_product(feas.sets.tight, e))
                         return;
                       const auto x = direct_candidate(inst, e);
                       if (is_feasible(inst, x, tol)) {
                         complement.passed = false;
                         complement.witness = {{"e", one_based(e)},
                                               {"point", x}};
                       }
                     });
    if (count != report.e_cardinality) {
      potential_card.passed = false;
      potential_card.witness = {{"counted", count},
                                {"product", report.e_cardinality}};
    }
    report.checks.push_back(std::move(complement));
    report.checks.push_back(std::move(potential_card));
  } else {
    report.notes.push_back("|E| = " + std::to_string(report.e_cardinality) +
                           " exceeds " + std::to_string(options.full_e_limit) +
                           "; complement pass skipped");
  }

  const auto costs = split_costs(inst.c());
  const auto oracle = brute_force_z1(inst, costs.plus, tol, options.cap);
  report.oracle_z1 = oracle.z1;
  report.oracle_e = oracle.e;

  AuditCheck agree{"solver_matches_oracle", true, nullptr};
  const auto solved = solve(inst, SolverConfig{tol, {}});
  const double attained =
      solved.status == Status::optimal
          ? dot(costs.plus, direct_candidate(inst, solved.e_star.choices()))
          : 0.0;
  if (solved.status != Status::optimal || solved.z1 != oracle.z1 ||
      attained != oracle.z1) {
    agree.passed = false;
    agree.witness = {{"solver_z1", solved.z1},
                     {"solver_e", solved.e_star.to_one_based()},
                     {"attained", attained},
                     {"oracle_z1", oracle.z1},
                     {"oracle_e", oracle.e.to_one_based()}};
  }
  report.checks.push_back(std::move(agree));
  return report;
}

json to_json(const AuditReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  json doc;
  doc["instance_name"] = report.instance_name;
  doc["consistent"] = report.consistent;
  doc["passed"] = report.passed();
  doc["checks"] = std::move(checks);
  doc["e_cardinality"] = report.e_cardinality;
  doc["tight_cardinality"] = report.tight_cardinality;
  doc["oracle_z1"] =
      report.oracle_z1 ? json(*report.oracle_z1) : json(nullptr);
  doc["oracle_e"] =
      report.oracle_e ? json(report.oracle_e->to_one_based()) : json(nullptr);
  doc["notes"] = report.notes;
  return doc;
}

}  // namespace lukfre
