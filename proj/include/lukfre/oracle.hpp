#pragma once

// Brute-force reference computations. Nothing here calls into the
// branch-and-bound or the candidate assembly routines; candidate points
// are rebuilt from their definition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lukfre/candidates.hpp"
#include "lukfre/instance.hpp"

namespace lukfre {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;
inline constexpr std::uint64_t kFullEnumerationLimit = 10'000;

struct OracleZ1 {
  double z1 = 0.0;
  Assignment e;  // lexicographically first minimiser
};

// Exhaustive min of c+ . X(e) over the tight product. Throws
// InconsistentError when the product is empty (or the system inconsistent)
// and CapExceededError when it is larger than `cap`.
OracleZ1 brute_force_z1(const Instance& inst, std::span<const double> c_plus,
                        double tol = kDefaultTolerance,
                        std::uint64_t cap = kDefaultEnumerationCap);

struct FeasibleSample {
  std::vector<double> point;
  Assignment origin;  // the box [X(origin), X_max] it was drawn from
};

// Uniform draws from boxes [X(e), X_max] with e chosen uniformly from the
// tight product. Every point is checked against the equations before it
// is returned; a violation throws AuditFailure naming the point.
std::vector<FeasibleSample> sample_feasible(const Instance& inst,
                                            std::size_t count,
                                            std::uint64_t seed,
                                            double tol = kDefaultTolerance);

struct AuditCheck {
  std::string name;
  bool passed = true;
  nlohmann::json witness;  // null when passed
};

struct AuditReport {
  std::string instance_name;
  bool consistent = false;
  std::vector<AuditCheck> checks;
  std::uint64_t e_cardinality = 0;
  std::uint64_t tight_cardinality = 0;
  std::optional<double> oracle_z1;
  std::optional<Assignment> oracle_e;
  std::vector<std::string> notes;

  bool passed() const;
  const AuditCheck* find(std::string_view name) const;
};

struct AuditOptions {
  // The pass over the complement E \ tight product runs only when |E| is at
  // most this, unless `force_full_e` is set.
  std::uint64_t full_e_limit = kFullEnumerationLimit;
  bool force_full_e = false;
  std::uint64_t cap = kDefaultEnumerationCap;
};

// Checks, with a witness on failure:
//   candidates_below_max     X(e) <= X_max for e in the tight product
//   candidates_feasible      A o X(e) = b for e in the tight product
//   complement_infeasible    X(e) infeasible for e in E \ tight product
//   cardinality_potential    |E| matches a direct count
//   cardinality_tight        |tight product| matches a direct count
//   solver_matches_oracle    solve() reaches the exhaustive Z1 exactly
// Failures are report entries, never exceptions.
AuditReport property_audit(const Instance& inst,
                           double tol = kDefaultTolerance,
                           const AuditOptions& options = {});

nlohmann::json to_json(const AuditReport& report);

}  // namespace lukfre
