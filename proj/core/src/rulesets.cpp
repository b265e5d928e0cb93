#include "covergame/rulesets.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

namespace covergame {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::vector<std::vector<int>> adjacency(const RelationGraph& graph) {
  std::vector<std::vector<int>> adj(graph.nodes.size());
  for (const auto& [from, to] : graph.edges) adj[from].push_back(to);
  return adj;
}

}  // namespace

int RelationGraph::node_index(double value) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), value);
  if (it == nodes.end() || *it != value) return -1;
  return static_cast<int>(it - nodes.begin());
}

RelationGraph derive_relation(const Ruleset& ruleset) {
  if (ruleset.pairs.empty()) {
    throw InvalidParameterError("ruleset must contain at least one pair");
  }
  for (std::size_t i = 0; i < ruleset.pairs.size(); ++i) {
    const PlanePair& p = ruleset.pairs[i];
    const bool finite = std::isfinite(p.above_x1) && std::isfinite(p.above_x2) &&
                        std::isfinite(p.below_x1) && std::isfinite(p.below_x2);
    if (!finite || !(p.above_x1 < p.above_x2) || !(p.below_x1 > p.below_x2)) {
      throw RegionViolationError(
          "pair " + std::to_string(i) +
          " must straddle the diagonal (above: x1 < x2, below: x1 > x2)");
    }
  }

  std::set<double> node_set;
  for (const PlanePair& p : ruleset.pairs) {
    node_set.insert(p.above_x1);
    node_set.insert(p.below_x1);
  }
  RelationGraph graph;
  graph.nodes.assign(node_set.begin(), node_set.end());

  std::set<std::pair<int, int>> edge_set;
  for (const PlanePair& p : ruleset.pairs) {
    edge_set.emplace(graph.node_index(p.below_x1), graph.node_index(p.above_x1));
  }
  graph.edges.assign(edge_set.begin(), edge_set.end());
  return graph;
}

AcyclicityResult is_acyclic(const RelationGraph& graph) {
  const auto adj = adjacency(graph);
  const int count = static_cast<int>(graph.nodes.size());

  // Shortest directed cycle: BFS back to each start node. The graphs here
  // are small samples, so the quadratic scan is fine.
  std::vector<int> best_cycle;
  for (int start = 0; start < count; ++start) {
    std::vector<int> parent(count, -1);
    std::vector<int> depth(count, -1);
    std::deque<int> queue{start};
    depth[start] = 0;
    int found = -1;
    while (!queue.empty() && found < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (v == start) {
          found = u;
          break;
        }
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (found < 0) continue;
    std::vector<int> cycle;
    for (int v = found; v != -1; v = parent[v]) cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());  // start, ..., found
    if (best_cycle.empty() || cycle.size() < best_cycle.size()) {
      best_cycle = std::move(cycle);
    }
  }

  if (best_cycle.empty()) return AcyclicityResult{true, {}};
  AcyclicityResult result{false, {}};
  result.cycle.reserve(best_cycle.size());
  for (int v : best_cycle) result.cycle.push_back(graph.node_value(v));
  return result;
}

double OrderMap::at(double x) const {
  const auto it = std::lower_bound(
      assignment.begin(), assignment.end(), x,
      [](const std::pair<double, double>& entry, double key) {
        return entry.first < key;
      });
  if (it == assignment.end() || it->first != x) {
    throw MissingAssignmentError("no value assigned to node " + fmt(x));
  }
  return it->second;
}

SolveResult build_order_map(const RelationGraph& graph) {
  const AcyclicityResult acyclicity = is_acyclic(graph);
  if (!acyclicity.acyclic) {
    return SolveResult{std::nullopt, acyclicity.cycle};
  }

  // layer(v) = longest path leaving v; every edge then descends by at least
  // one layer. Memoized DFS, safe since the graph is acyclic.
  const auto adj = adjacency(graph);
  const int count = static_cast<int>(graph.nodes.size());
  std::vector<int> layer(count, -1);
  const auto longest = [&](auto&& self, int v) -> int {
    if (layer[v] >= 0) return layer[v];
    int depth = 0;
    for (int w : adj[v]) depth = std::max(depth, self(self, w) + 1);
    return layer[v] = depth;
  };

  int max_layer = 0;
  for (int v = 0; v < count; ++v) max_layer = std::max(max_layer, longest(longest, v));

  OrderMap map;
  map.assignment.reserve(count);
  for (int v = 0; v < count; ++v) {
    map.assignment.emplace_back(graph.node_value(v),
                                (layer[v] + 1.0) / (max_layer + 2.0));
  }
  return SolveResult{std::move(map), {}};
}

DominanceReport check_dominance(const OrderMap& f, const Ruleset& ruleset) {
  const RelationGraph graph = derive_relation(ruleset);
  for (double node : graph.nodes) f.at(node);  // surfaces MissingAssignment

  DominanceReport report{true, 0, 2.0};
  for (std::size_t i = 0; i < ruleset.pairs.size(); ++i) {
    const PlanePair& p = ruleset.pairs[i];
    const double win = 0.5 + (f.at(p.below_x1) - f.at(p.above_x1)) / 2.0;
    if (win < report.worst_win_prob) {
      report.worst_win_prob = win;
      report.worst_pair = static_cast<int>(i);
    }
  }
  report.dominant = report.worst_win_prob > 0.5;
  return report;
}

Ruleset mirror_ruleset(std::span<const std::pair<double, double>> spans) {
  if (spans.empty()) {
    throw InvalidParameterError("need at least one (a, b) sample");
  }
  Ruleset ruleset;
  ruleset.pairs.reserve(spans.size());
  for (const auto& [a, b] : spans) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
      throw InvalidParameterError("mirror sample needs a < b, got (" + fmt(a) +
                                  ", " + fmt(b) + ")");
    }
    ruleset.pairs.push_back(PlanePair{a, b, b, a});
  }
  return ruleset;
}

Ruleset vertical_ruleset(std::span<const VerticalSample> samples) {
  if (samples.empty()) {
    throw InvalidParameterError("need at least one (x, eps, eps) sample");
  }
  Ruleset ruleset;
  ruleset.pairs.reserve(samples.size());
  for (const VerticalSample& s : samples) {
    if (!(s.eps_above > 0.0) || !(s.eps_below > 0.0) || !std::isfinite(s.x) ||
        !std::isfinite(s.eps_above) || !std::isfinite(s.eps_below)) {
      throw InvalidParameterError("vertical sample needs positive epsilons");
    }
    ruleset.pairs.push_back(
        PlanePair{s.x, s.x + s.eps_above, s.x, s.x - s.eps_below});
  }
  return ruleset;
}

}  // namespace covergame
