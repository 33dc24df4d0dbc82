#include <doctest.h>

#include "lukfre/bnb.hpp"
#include "lukfre/errors.hpp"
#include "lukfre/oracle.hpp"
#include "lukfre/solver.hpp"
#include "fixtures.hpp"

using namespace lukfre;

namespace {

Assignment prefix(std::vector<std::size_t> one_based) {
  one_based.resize(4, 0);
  return Assignment::from_one_based(one_based);
}

const std::vector<double> kWorkedPlus{3, 4, 1, 1, 0, 5};

}  // namespace

TEST_CASE("lower bounds of the worked example's nodes") {
  const auto inst = testing::worked_example();
  CHECK(lower_bound(prefix({3}), kWorkedPlus, inst) == doctest::Approx(0.95));
  CHECK(lower_bound(prefix({5}), kWorkedPlus, inst) == 0.0);
  CHECK(lower_bound(prefix({5, 4}), kWorkedPlus, inst) == doctest::Approx(0.65));
  CHECK(lower_bound(prefix({5, 6}), kWorkedPlus, inst) == doctest::Approx(4.0));
  CHECK(lower_bound(prefix({5, 4, 1}), kWorkedPlus, inst) == doctest::Approx(2.75));
  CHECK(lower_bound(prefix({5, 4, 2}), kWorkedPlus, inst) == doctest::Approx(3.45));
  CHECK(lower_bound(prefix({3, 4}), kWorkedPlus, inst) == doctest::Approx(1.6));
  CHECK(lower_bound(prefix({3, 6}), kWorkedPlus, inst) == doctest::Approx(4.95));
  CHECK(lower_bound(prefix({3, 4, 1}), kWorkedPlus, inst) == doctest::Approx(3.7));
  CHECK(lower_bound(prefix({3, 4, 2}), kWorkedPlus, inst) == doctest::Approx(4.4));
}

TEST_CASE("lower bound takes the max on a shared column") {
  // Unit candidate values 0.1 + 1 - 0.5 = 0.6 and 0.2 + 1 - 0.5 = 0.7.
  const auto inst = Instance::create({2}, {{0.5}, {0.5}}, {0.1, 0.2});
  const Assignment both(std::vector<std::size_t>{0, 0});
  CHECK(lower_bound(both, std::vector<double>{2}, inst) ==
        doctest::Approx(1.4));
}

TEST_CASE("worked example search") {
  const auto inst = testing::worked_example();
  const auto feas = analyze(inst);
  std::vector<TraceRecord> trace;
  BnbConfig config;
  config.trace = [&](const TraceRecord& r) { trace.push_back(r); };
  const auto result = solve_z1(inst, kWorkedPlus, feas.sets, config);

  CHECK(result.z1 == doctest::Approx(2.75));
  CHECK(result.e_star == Assignment::from_one_based(
                             std::vector<std::size_t>{5, 4, 1, 5}));
  CHECK(result.point == assemble_candidate(result.e_star, inst).point);
  CHECK(result.stats.paths_completed == 1);
  CHECK(result.stats.nodes_visited == 11);
  CHECK(result.stats.incumbent_updates == 1);
  CHECK(result.stats.nodes_pruned == 5);

  // Least bound first: root, node 2 (e1=5), node 3, then node 1 (0.95)
  // and node 8 (1.6) ahead of node 5 (2.75), whose only child completes
  // the path.
  std::vector<std::vector<std::size_t>> expanded;
  for (const auto& r : trace) {
    if (r.action == TraceAction::expanded) {
      auto p = r.prefix.to_one_based();
      p.resize(r.depth);
      expanded.push_back(p);
    }
  }
  const std::vector<std::vector<std::size_t>> expected{
      {}, {5}, {5, 4}, {3}, {3, 4}, {5, 4, 1}};
  CHECK(expanded == expected);

  const auto incumbent = std::find_if(trace.begin(), trace.end(), [](auto& r) {
    return r.action == TraceAction::incumbent;
  });
  REQUIRE(incumbent != trace.end());
  CHECK(incumbent->depth == 4);
  // Live nodes 4 and 6 are still queued when the incumbent appears.
  const auto late_prunes = std::count_if(incumbent, trace.end(), [](auto& r) {
    return r.action == TraceAction::pruned && r.depth < 4;
  });
  CHECK(late_prunes >= 2);
}

TEST_CASE("zero costs return the first enumerated assignment") {
  const auto inst = testing::worked_example();
  const auto feas = analyze(inst);
  const auto result =
      solve_z1(inst, std::vector<double>(6, 0.0), feas.sets);
  CHECK(result.z1 == 0.0);
  CHECK(result.e_star == enumerate_tight(feas.sets).front());
}

TEST_CASE("empty tight set is rejected") {
  const auto inst = testing::worked_example();
  auto sets = analyze(inst).sets;
  sets.tight[2].clear();
  CHECK_THROWS_AS(solve_z1(inst, kWorkedPlus, sets), InconsistentError);
}

TEST_CASE("trace lines") {
  TraceRecord r{2, Assignment::from_one_based(std::vector<std::size_t>{5, 4, 0, 0}),
                0.65, TraceAction::expanded};
  CHECK(trace_line(r) ==
        R"({"action":"expanded","assignment":[5,4,null,null],"bound":0.65,"depth":2})");
}

TEST_CASE("search agrees with exhaustive minimisation and is deterministic") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = generate_random(1 + seed % 6, 1 + (seed / 3) % 6, seed, true);
    const auto feas = analyze(inst);
    REQUIRE(feas.consistent);
    if (feas.sets.tight_cardinality > 10'000) continue;
    const auto plus = split_costs(inst.c()).plus;

    const auto oracle = brute_force_z1(inst, plus);
    const auto given = solve_z1(inst, plus, feas.sets);
    CHECK(given.z1 == oracle.z1);
    CHECK(dot(plus, assemble_candidate(given.e_star, inst).point) == given.z1);

    BnbConfig ascending;
    ascending.order = RowOrder::ascending_tight;
    const auto reordered = solve_z1(inst, plus, feas.sets, ascending);
    CHECK(reordered.z1 == oracle.z1);

    const auto again = solve_z1(inst, plus, feas.sets);
    CHECK(again.e_star == given.e_star);
    CHECK(again.stats.nodes_visited == given.stats.nodes_visited);
    CHECK(again.stats.nodes_pruned == given.stats.nodes_pruned);

    // Work bounds.
    std::uint64_t level = 1, total = 0;
    for (const auto& t : feas.sets.tight) {
      level *= t.size();
      total += level;
    }
    CHECK(given.stats.nodes_visited <= total);
    CHECK(given.stats.paths_completed >= 1);
    CHECK(given.stats.paths_completed <= feas.sets.tight_cardinality);
  }
}

TEST_CASE("bounds are valid and monotone along every explored prefix") {
  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    const auto inst = generate_random(2 + seed % 4, 2 + seed % 5, seed, true);
    const auto feas = analyze(inst);
    if (feas.sets.tight_cardinality > 2'000) continue;
    const auto plus = split_costs(inst.c()).plus;
    const auto all = enumerate_tight(feas.sets);

    std::vector<TraceRecord> expanded;
    BnbConfig config;
    config.trace = [&](const TraceRecord& r) {
      if (r.action == TraceAction::expanded) expanded.push_back(r);
    };
    solve_z1(inst, plus, feas.sets, config);

    for (const auto& node : expanded) {
      CHECK(node.bound == lower_bound(node.prefix, plus, inst));
      for (const auto& e : all) {
        bool extends = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
          extends &= !node.prefix.assigned(i) || node.prefix[i] == e[i];
        }
        if (!extends) continue;
        CHECK(dot(plus, assemble_candidate(e, inst).point) >= node.bound);
        // Monotone along the path from this node towards e.
        Assignment path = node.prefix;
        double previous = node.bound;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (path.assigned(i)) continue;
          path.assign(i, e[i]);
          const double next = lower_bound(path, plus, inst);
          CHECK(next >= previous);
          previous = next;
        }
      }
    }
  }
}
