#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "covergame/rng.hpp"
#include "covergame/rulesets.hpp"
#include "doctest.h"

using namespace covergame;

namespace {

std::pair<double, double> edge_values(const RelationGraph& g, std::size_t i) {
  return {g.node_value(g.edges[i].first), g.node_value(g.edges[i].second)};
}

// A pair whose relation edge is (from -> to): the below-diagonal point has
// first coordinate `from`, the above-diagonal point `to`.
PlanePair pair_with_edge(double from, double to) {
  return PlanePair{to, to + 1.0, from, from - 1.0};
}

}  // namespace

TEST_SUITE_BEGIN("rulesets");

TEST_CASE("derive_relation: mirror sample") {
  const Ruleset ruleset =
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}, {1, 2}});
  const RelationGraph graph = derive_relation(ruleset);
  CHECK(graph.nodes == std::vector{0.0, 1.0, 2.0});
  REQUIRE(graph.edges.size() == 2);
  CHECK(edge_values(graph, 0) == std::pair{1.0, 0.0});
  CHECK(edge_values(graph, 1) == std::pair{2.0, 1.0});
}

TEST_CASE("derive_relation: vertical sample gives a self-loop") {
  const Ruleset ruleset =
      vertical_ruleset(std::vector<VerticalSample>{{0.0, 1.0, 1.0}});
  CHECK(ruleset.pairs[0] == PlanePair{0.0, 1.0, 0.0, -1.0});
  const RelationGraph graph = derive_relation(ruleset);
  CHECK(graph.nodes == std::vector{0.0});
  REQUIRE(graph.edges.size() == 1);
  CHECK(graph.edges[0] == std::pair{0, 0});
}

TEST_CASE("derive_relation: duplicate edges collapse, single pair works") {
  Ruleset ruleset =
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}, {0, 1}});
  CHECK(derive_relation(ruleset).edges.size() == 1);

  const RelationGraph single = derive_relation(
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}}));
  CHECK(single.edges.size() == 1);
}

TEST_CASE("derive_relation: region violations name the pair") {
  Ruleset bad;
  bad.pairs.push_back(PlanePair{0.0, 1.0, 0.0, -1.0});  // fine
  bad.pairs.push_back(PlanePair{2.0, 1.0, 3.0, 2.0});   // above region wrong
  try {
    derive_relation(bad);
    FAIL("expected RegionViolationError");
  } catch (const RegionViolationError& e) {
    CHECK(std::string(e.what()).find("pair 1") != std::string::npos);
  }
  CHECK_THROWS_AS(derive_relation(Ruleset{}), InvalidParameterError);
}

TEST_CASE("is_acyclic: verdicts and witnesses") {
  const RelationGraph mirror = derive_relation(
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}, {1, 2}}));
  const AcyclicityResult ok = is_acyclic(mirror);
  CHECK(ok.acyclic);
  CHECK(ok.cycle.empty());

  const RelationGraph vertical = derive_relation(
      vertical_ruleset(std::vector<VerticalSample>{{0.0, 1.0, 1.0}}));
  const AcyclicityResult self_loop = is_acyclic(vertical);
  CHECK_FALSE(self_loop.acyclic);
  CHECK(self_loop.cycle == std::vector{0.0});

  Ruleset two_cycle;
  two_cycle.pairs.push_back(pair_with_edge(0.0, 1.0));
  two_cycle.pairs.push_back(pair_with_edge(1.0, 0.0));
  const AcyclicityResult cycle = is_acyclic(derive_relation(two_cycle));
  CHECK_FALSE(cycle.acyclic);
  CHECK(cycle.cycle == std::vector{0.0, 1.0});
}

TEST_CASE("is_acyclic: self-loop beats a longer cycle as witness") {
  Ruleset mixed;
  mixed.pairs.push_back(pair_with_edge(5.0, 6.0));
  mixed.pairs.push_back(pair_with_edge(6.0, 5.0));
  mixed.pairs.push_back(pair_with_edge(7.0, 7.0));
  const AcyclicityResult result = is_acyclic(derive_relation(mixed));
  CHECK_FALSE(result.acyclic);
  CHECK(result.cycle == std::vector{7.0});
}

TEST_CASE("build_order_map: mirror layering") {
  const SolveResult solved = build_order_map(derive_relation(
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}, {1, 2}})));
  REQUIRE(solved.solvable());
  const OrderMap& map = *solved.map;
  CHECK(map.at(0.0) == 0.25);
  CHECK(map.at(1.0) == 0.5);
  CHECK(map.at(2.0) == 0.75);
}

TEST_CASE("build_order_map: single edge") {
  Ruleset single;
  single.pairs.push_back(pair_with_edge(3.0, -2.0));  // f(3) > f(-2)
  const SolveResult solved = build_order_map(derive_relation(single));
  REQUIRE(solved.solvable());
  const OrderMap& map = *solved.map;
  CHECK(map.at(3.0) > map.at(-2.0));
  CHECK(map.at(3.0) > 0.0);
  CHECK(map.at(3.0) < 1.0);
  CHECK(map.at(-2.0) > 0.0);
  CHECK(map.at(-2.0) < 1.0);
}

TEST_CASE("build_order_map: unsolvable reports the witness") {
  const SolveResult unsolvable = build_order_map(derive_relation(
      vertical_ruleset(std::vector<VerticalSample>{{0.0, 1.0, 1.0}})));
  CHECK_FALSE(unsolvable.solvable());
  CHECK(unsolvable.witness_cycle == std::vector{0.0});
}

TEST_CASE("check_dominance: built map on the mirror sample") {
  const Ruleset ruleset =
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}, {1, 2}});
  const SolveResult solved = build_order_map(derive_relation(ruleset));
  REQUIRE(solved.solvable());
  const DominanceReport report = check_dominance(*solved.map, ruleset);
  CHECK(report.dominant);
  CHECK(report.worst_win_prob == 0.625);  // 1/2 + (0.5 - 0.25)/2
  CHECK(report.worst_pair == 0);
}

TEST_CASE("check_dominance: constant map fails, direct formula values") {
  const Ruleset ruleset =
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}, {1, 2}});
  OrderMap constant;
  constant.assignment = {{0.0, 0.5}, {1.0, 0.5}, {2.0, 0.5}};
  const DominanceReport flat = check_dominance(constant, ruleset);
  CHECK_FALSE(flat.dominant);
  CHECK(flat.worst_win_prob == 0.5);

  Ruleset single;
  single.pairs.push_back(pair_with_edge(1.0, 0.0));
  OrderMap spread;
  spread.assignment = {{0.0, 0.25}, {1.0, 0.75}};
  const DominanceReport report = check_dominance(spread, single);
  CHECK(report.dominant);
  CHECK(report.worst_win_prob == 0.75);  // 1/2 + (0.75 - 0.25)/2
}

TEST_CASE("check_dominance: missing assignment names the node") {
  Ruleset single;
  single.pairs.push_back(pair_with_edge(1.5, 0.0));
  OrderMap partial;
  partial.assignment = {{0.0, 0.25}};
  try {
    check_dominance(partial, single);
    FAIL("expected MissingAssignmentError");
  } catch (const MissingAssignmentError& e) {
    CHECK(std::string(e.what()).find("1.5") != std::string::npos);
  }
}

TEST_CASE("builtin rulesets: construction and parameter validation") {
  const Ruleset mirror =
      mirror_ruleset(std::vector<std::pair<double, double>>{{0, 1}});
  CHECK(mirror.pairs[0] == PlanePair{0.0, 1.0, 1.0, 0.0});

  CHECK_THROWS_AS(
      mirror_ruleset(std::vector<std::pair<double, double>>{{1, 1}}),
      InvalidParameterError);
  CHECK_THROWS_AS(
      mirror_ruleset(std::vector<std::pair<double, double>>{{2, 1}}),
      InvalidParameterError);
  CHECK_THROWS_AS(mirror_ruleset(std::vector<std::pair<double, double>>{}),
                  InvalidParameterError);
  CHECK_THROWS_AS(
      vertical_ruleset(std::vector<VerticalSample>{{0.0, 0.0, 1.0}}),
      InvalidParameterError);
  CHECK_THROWS_AS(
      vertical_ruleset(std::vector<VerticalSample>{{0.0, 1.0, -1.0}}),
      InvalidParameterError);
}

TEST_CASE("property: a built map always dominates its ruleset") {
  RngStream rng(2026);
  int solvable_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Random small-integer relations; collisions create shared nodes and,
    // often, cycles.
    Ruleset ruleset;
    const int pairs = 1 + static_cast<int>(rng.next_below(6));
    for (int i = 0; i < pairs; ++i) {
      const double from = static_cast<double>(rng.next_below(5)) - 2.0;
      const double to = static_cast<double>(rng.next_below(5)) - 2.0;
      ruleset.pairs.push_back(pair_with_edge(from, to));
    }
    const RelationGraph graph = derive_relation(ruleset);
    const SolveResult solved = build_order_map(graph);
    const AcyclicityResult acyclicity = is_acyclic(graph);

    // Completeness: solvable exactly when acyclic.
    CHECK(solved.solvable() == acyclicity.acyclic);

    if (solved.solvable()) {
      ++solvable_count;
      for (const auto& [node, value] : solved.map->assignment) {
        CHECK(value > 0.0);
        CHECK(value < 1.0);
      }
      for (const auto& [from, to] : graph.edges) {
        CHECK(solved.map->at(graph.node_value(from)) >
              solved.map->at(graph.node_value(to)));
      }
      const DominanceReport report = check_dominance(*solved.map, ruleset);
      CHECK(report.dominant);
      CHECK(report.worst_win_prob > 0.5);
    } else {
      // The witness must be a real cycle: consecutive edges all present.
      const std::vector<double>& cycle = solved.witness_cycle;
      REQUIRE(!cycle.empty());
      std::set<std::pair<int, int>> edges(graph.edges.begin(),
                                          graph.edges.end());
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = graph.node_index(cycle[i]);
        const int to = graph.node_index(cycle[(i + 1) % cycle.size()]);
        REQUIRE(from >= 0);
        REQUIRE(to >= 0);
        CHECK(edges.contains({from, to}));
      }
    }
  }
  CHECK(solvable_count > 10);  // the generator finds both verdicts
  CHECK(solvable_count < 200);
}

TEST_CASE("property: chained mirror samples give increasing maps") {
  RngStream rng(31415);
  for (int trial = 0; trial < 50; ++trial) {
    // Sorted distinct anchors chained pairwise, plus extra forward spans:
    // the relation then compares every consecutive node pair.
    const int count = 3 + static_cast<int>(rng.next_below(4));
    std::set<double> anchor_set;
    while (static_cast<int>(anchor_set.size()) < count) {
      anchor_set.insert(std::round(rng.next_unit() * 40.0) / 4.0);
    }
    const std::vector<double> anchors(anchor_set.begin(), anchor_set.end());

    std::vector<std::pair<double, double>> spans;
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
      spans.emplace_back(anchors[i], anchors[i + 1]);
    }
    if (anchors.size() >= 3 && rng.next_below(2) == 0) {
      spans.emplace_back(anchors.front(), anchors.back());
    }

    const SolveResult solved =
        build_order_map(derive_relation(mirror_ruleset(spans)));
    REQUIRE(solved.solvable());
    const auto& assignment = solved.map->assignment;  // sorted by node
    for (std::size_t i = 1; i < assignment.size(); ++i) {
      CHECK(assignment[i].second > assignment[i - 1].second);
    }
  }
}

TEST_SUITE_END();
