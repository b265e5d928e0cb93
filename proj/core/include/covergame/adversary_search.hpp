#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covergame/evaluator.hpp"
#include "covergame/game.hpp"

namespace covergame {

/// Largest n accepted by minimize_edge (each probe costs one subset DP).
inline constexpr int kMaxSearchN = 12;

struct SearchConfig {
  int n = 3;
  int restarts = 8;
  int max_iters = 500;
  double initial_step = 1.0;
  double step_shrink = 0.5;
  double min_gap = 1e-6;  // smallest allowed pairwise spacing
  std::uint64_t seed = 0;
  double range_lo = -5.0;  // initialization interval
  double range_hi = 5.0;

  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

struct SearchResult {
  AdversaryInput best_input;
  double best_value = 0.0;
  double baseline = 0.0;  // 1/n!
  double edge = 0.0;      // best_value - baseline
  std::uint64_t evaluations = 0;
  /// Accepted objective values per restart, in acceptance order (the first
  /// entry is the start point's value); each sequence is non-increasing.
  std::vector<std::vector<double>> trace;

  std::vector<double> restart_best() const {
    std::vector<double> best;
    best.reserve(trace.size());
    for (const auto& t : trace) best.push_back(t.back());
    return best;
  }
};

/// Derivative-free minimization of the exact win probability over adversary
/// inputs: multi-start coordinate pattern search with shrinking steps.
/// Candidate points are clamped into [range_lo, range_hi] and projected to
/// descending order with pairwise spacing at least min_gap, so every probe
/// is a valid input and its objective stays strictly above 1/n!; an
/// evaluation at or below the baseline aborts with BaselineViolationError
/// since it can only mean a defect. Deterministic given the config;
/// restart r draws from RngStream::derived(seed, r).
SearchResult minimize_edge(const SearchConfig& config);

struct SweepRow {
  double scale = 0.0;
  double win_probability = 0.0;
  double edge = 0.0;
};

/// Evaluates dp_win_prob on scale * base for each scale, preserving input
/// order. Scales must be positive and finite.
std::vector<SweepRow> edge_sweep(const AdversaryInput& base,
                                 std::span<const double> scales);

}  // namespace covergame
