#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covergame/errors.hpp"

namespace covergame {

/// A categorical distribution on {0,...,k}: nonnegative entries summing to 1
/// within kDistributionSumTolerance.
struct CategoricalDistribution {
  std::vector<double> probs;

  int outcomes() const noexcept { return static_cast<int>(probs.size()); }
  friend bool operator==(const CategoricalDistribution&,
                         const CategoricalDistribution&) = default;
};

inline constexpr double kDistributionSumTolerance = 1e-12;

/// Throws InvalidDistributionError unless entries are nonnegative and sum to
/// one within tolerance.
void validate(const CategoricalDistribution& dist);

/// Numerically stable exp-normalization of `values` (max subtracted before
/// exponentiation). No implicit leading zero and no sorting.
std::vector<double> stable_softmax(std::span<const double> values);

/// Stage guess distribution on {0,...,k} for k visible values: the visible
/// values are sorted descending, a leading zero is prepended, and the softmax
/// is applied. Outcome j >= 1 carries weight e^(j-th largest visible value);
/// outcome 0 carries weight 1. Invariant under reordering of `visible`.
///
/// Throws DuplicateValuesError on ties and NonFiniteInputError on NaN/inf.
CategoricalDistribution softmax_guess(std::span<const double> visible);

/// 1 / (1 + e^{-x}), computed without overflow for any finite x.
double logistic(double x) noexcept;

/// Two-item specialization: probability of declaring the hidden item smaller
/// than the visible value x. Identical to softmax_guess({x}).probs[1].
double logistic_strategy_n2(double x);

/// Names accepted by increasing_strategy_n2, in registry order.
std::vector<std::string> increasing_strategy_names();

/// Evaluates a registered strictly increasing map R -> [0,1] at x.
/// Built-ins: "logistic" (the default) and "ramp", a piecewise-linear
/// cumulative ramp on [-10, 10].
/// Throws UnknownStrategyError for unregistered names, NonFiniteInputError
/// for non-finite x.
double increasing_strategy_n2(std::string_view name, double x);

/// Uniform distribution on {0,...,k}; the guessing baseline whose stagewise
/// product telescopes to exactly 1/n!.
CategoricalDistribution uniform_guess(int k);

}  // namespace covergame
