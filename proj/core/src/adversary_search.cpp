#include "covergame/adversary_search.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace covergame {
namespace {

constexpr double kMinStep = 1e-9;

void check_config(const SearchConfig& c) {
  if (c.n < 2) throw TooFewValuesError("search needs n >= 2");
  if (c.n > kMaxSearchN) {
    throw NTooLargeError("search capped at n = " + std::to_string(kMaxSearchN) +
                         ", got " + std::to_string(c.n));
  }
  if (c.restarts < 1 || c.max_iters < 1) {
    throw InvalidConfigError("restarts and max_iters must be >= 1");
  }
  if (!(c.min_gap > 0.0)) throw InvalidConfigError("min_gap must be > 0");
  if (!(c.step_shrink > 0.0 && c.step_shrink < 1.0)) {
    throw InvalidConfigError("step_shrink must lie in (0, 1)");
  }
  if (!(c.initial_step > 0.0)) {
    throw InvalidConfigError("initial_step must be > 0");
  }
  if (!(c.range_lo < c.range_hi) || !std::isfinite(c.range_lo) ||
      !std::isfinite(c.range_hi)) {
    throw InvalidConfigError("coordinate range must be a finite interval");
  }
  if (c.min_gap * (c.n - 1) > c.range_hi - c.range_lo) {
    throw InfeasibleGapError(
        "min_gap * (n - 1) exceeds the coordinate range width");
  }
}

/// Clamp into the coordinate interval, sort descending, then push any
/// too-close value down to min_gap below its predecessor. The clamp keeps
/// iterates inside the box: outside it the logistic saturates and the edge
/// falls below double-precision resolution, so the objective would flatten
/// onto the baseline exactly. The spacing pass may dip at most
/// (n-1) * min_gap below the lower end; the result always satisfies the
/// input invariants.
std::vector<double> project(std::vector<double> point, const SearchConfig& c) {
  for (double& v : point) v = std::clamp(v, c.range_lo, c.range_hi);
  std::sort(point.begin(), point.end(), std::greater<>());
  for (std::size_t i = 1; i < point.size(); ++i) {
    if (point[i] > point[i - 1] - c.min_gap) {
      point[i] = point[i - 1] - c.min_gap;
    }
  }
  return point;
}

class Objective {
 public:
  explicit Objective(double baseline) : baseline_(baseline) {}

  double operator()(const std::vector<double>& point) {
    ++evaluations_;
    const double value = dp_win_prob(AdversaryInput(point));
    if (value <= baseline_) {
      throw BaselineViolationError(
          "objective " + std::to_string(value) +
          " not strictly above the 1/n! baseline; this is a defect");
    }
    return value;
  }

  std::uint64_t evaluations() const noexcept { return evaluations_; }

 private:
  double baseline_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace

SearchResult minimize_edge(const SearchConfig& config) {
  check_config(config);
  const int n = config.n;
  const double baseline = uniform_baseline(n);
  Objective objective(baseline);

  std::vector<double> global_best_point;
  double global_best = 2.0;  // above any probability
  std::vector<std::vector<double>> trace;
  trace.reserve(config.restarts);

  for (int restart = 0; restart < config.restarts; ++restart) {
    RngStream rng = RngStream::derived(config.seed,
                                       static_cast<std::uint64_t>(restart));
    std::vector<double> start(n);
    for (double& v : start) {
      v = config.range_lo + rng.next_unit() * (config.range_hi - config.range_lo);
    }
    std::vector<double> current = project(std::move(start), config);
    double best = objective(current);
    std::vector<double> accepted{best};

    double step = config.initial_step;
    for (int iter = 0; iter < config.max_iters && step >= kMinStep; ++iter) {
      bool improved = false;
      for (int i = 0; i < n; ++i) {
        for (double delta : {step, -step}) {
          std::vector<double> candidate = current;
          candidate[i] += delta;
          candidate = project(std::move(candidate), config);
          const double value = objective(candidate);
          if (value < best) {
            best = value;
            current = std::move(candidate);
            accepted.push_back(best);
            improved = true;
          }
        }
      }
      if (!improved) step *= config.step_shrink;
    }

    if (best < global_best) {
      global_best = best;
      global_best_point = current;
    }
    trace.push_back(std::move(accepted));
  }

  return SearchResult{AdversaryInput(std::move(global_best_point)),
                      global_best,
                      baseline,
                      global_best - baseline,
                      objective.evaluations(),
                      std::move(trace)};
}

std::vector<SweepRow> edge_sweep(const AdversaryInput& base,
                                 std::span<const double> scales) {
  for (double s : scales) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw InvalidParameterError("scales must be positive and finite");
    }
  }

  const double baseline = uniform_baseline(base.size());
  std::vector<SweepRow> rows;
  rows.reserve(scales.size());
  for (double s : scales) {
    std::vector<double> scaled = base.values();
    for (double& v : scaled) v *= s;
    const double win = dp_win_prob(AdversaryInput(std::move(scaled)));
    rows.push_back(SweepRow{s, win, win - baseline});
  }
  return rows;
}

}  // namespace covergame
