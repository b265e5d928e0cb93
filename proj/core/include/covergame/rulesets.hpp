#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "covergame/errors.hpp"

namespace covergame {

/// One admissible choice for the adversary: a point strictly above the plane
/// diagonal paired with a point strictly below it.
struct PlanePair {
  double above_x1 = 0.0;  // point in A: above_x1 < above_x2
  double above_x2 = 0.0;
  double below_x1 = 0.0;  // point in B: below_x1 > below_x2
  double below_x2 = 0.0;

  friend bool operator==(const PlanePair&, const PlanePair&) = default;
};

struct Ruleset {
  std::vector<PlanePair> pairs;
};

/// First coordinates of a ruleset's points with the "must exceed" relation:
/// an edge (source, target) requires f(source) > f(target), source being a
/// below-diagonal first coordinate and target an above-diagonal one.
struct RelationGraph {
  std::vector<double> nodes;                // ascending, unique
  std::vector<std::pair<int, int>> edges;   // node indices, deduped, sorted

  double node_value(int index) const { return nodes[index]; }
  int node_index(double value) const;  // -1 when absent
};

/// Projects a ruleset onto its relation. Validates region membership and
/// throws RegionViolationError (naming the pair index) on failure.
/// Duplicate edges are collapsed.
RelationGraph derive_relation(const Ruleset& ruleset);

struct AcyclicityResult {
  bool acyclic = true;
  /// When cyclic: a minimal-length directed cycle as node values; entry i
  /// has an edge to entry i+1 and the last entry closes back to the first.
  /// A self-loop is reported as a single node.
  std::vector<double> cycle;
};

AcyclicityResult is_acyclic(const RelationGraph& graph);

/// A finite strategy: node value -> guess parameter in the open unit
/// interval, with f(source) > f(target) across every edge.
struct OrderMap {
  std::vector<std::pair<double, double>> assignment;  // sorted by node value

  /// Throws MissingAssignmentError when x is unassigned.
  double at(double x) const;
};

struct SolveResult {
  std::optional<OrderMap> map;        // engaged iff solvable
  std::vector<double> witness_cycle;  // engaged iff unsolvable

  bool solvable() const noexcept { return map.has_value(); }
};

/// Builds an order-preserving map when the relation is acyclic: node v gets
/// (layer(v) + 1) / (L + 2) where layer(v) is the longest edge-path length
/// leaving v and L the largest layer; otherwise reports the witness cycle.
SolveResult build_order_map(const RelationGraph& graph);

struct DominanceReport {
  bool dominant = false;
  int worst_pair = 0;           // index of the minimizing pair
  double worst_win_prob = 0.0;  // 1/2 + (f(below) - f(above))/2 at that pair
};

/// Evaluates the per-pair win probability 1/2 + (f(x_B) - f(x_A))/2 and
/// reports whether every pair strictly beats 1/2.
/// Throws MissingAssignmentError if f misses a node of the relation.
DominanceReport check_dominance(const OrderMap& f, const Ruleset& ruleset);

/// Mirror-image pairs ((a,b),(b,a)) for each (a, b) with a < b.
/// Throws InvalidParameterError unless a < b throughout.
Ruleset mirror_ruleset(std::span<const std::pair<double, double>> spans);

struct VerticalSample {
  double x = 0.0;
  double eps_above = 0.0;
  double eps_below = 0.0;
};

/// Shared-vertical-line pairs ((x, x+eps_above), (x, x-eps_below)).
/// Throws InvalidParameterError unless both epsilons are positive.
Ruleset vertical_ruleset(std::span<const VerticalSample> samples);

}  // namespace covergame
