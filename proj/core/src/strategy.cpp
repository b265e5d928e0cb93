#include "covergame/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace covergame {
namespace {

double ramp_cdf(double x) noexcept {
  if (x <= -10.0) return 0.0;
  if (x >= 10.0) return 1.0;
  return (x + 10.0) / 20.0;
}

struct NamedMap {
  const char* name;
  double (*fn)(double);
};

constexpr NamedMap kIncreasingMaps[] = {
    {"logistic", +[](double x) { return logistic(x); }},
    {"ramp", ramp_cdf},
};

void check_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw NonFiniteInputError("visible values must be finite");
    }
  }
}

}  // namespace

void validate(const CategoricalDistribution& dist) {
  if (dist.probs.empty()) {
    throw InvalidDistributionError("distribution must be nonempty");
  }
  double sum = 0.0;
  for (double p : dist.probs) {
    if (!(p >= 0.0)) {
      throw InvalidDistributionError("entries must be nonnegative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDistributionSumTolerance) {
    throw InvalidDistributionError("entries must sum to 1 within 1e-12");
  }
}

std::vector<double> stable_softmax(std::span<const double> values) {
  const double shift = *std::max_element(values.begin(), values.end());
  std::vector<double> out(values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::exp(values[i] - shift);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

CategoricalDistribution softmax_guess(std::span<const double> visible) {
  if (visible.empty()) {
    throw DimensionMismatchError("stage needs at least one visible value");
  }
  check_finite(visible);

  std::vector<double> weights;
  weights.reserve(visible.size() + 1);
  weights.push_back(0.0);
  weights.insert(weights.end(), visible.begin(), visible.end());
  std::sort(weights.begin() + 1, weights.end(), std::greater<>());
  for (std::size_t i = 2; i < weights.size(); ++i) {
    if (weights[i] == weights[i - 1]) {
      throw DuplicateValuesError("visible values must be pairwise distinct");
    }
  }
  return CategoricalDistribution{stable_softmax(weights)};
}

double logistic(double x) noexcept {
  // Same arithmetic as the stable softmax of (0, x), so the two agree
  // bit-for-bit.
  if (x >= 0.0) {
    return 1.0 / (std::exp(-x) + 1.0);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double logistic_strategy_n2(double x) {
  if (!std::isfinite(x)) {
    throw NonFiniteInputError("visible value must be finite");
  }
  return logistic(x);
}

std::vector<std::string> increasing_strategy_names() {
  std::vector<std::string> names;
  for (const NamedMap& m : kIncreasingMaps) names.emplace_back(m.name);
  return names;
}

double increasing_strategy_n2(std::string_view name, double x) {
  if (!std::isfinite(x)) {
    throw NonFiniteInputError("argument must be finite");
  }
  for (const NamedMap& m : kIncreasingMaps) {
    if (name == m.name) return m.fn(x);
  }
  throw UnknownStrategyError("no increasing strategy named '" +
                             std::string(name) + "'");
}

CategoricalDistribution uniform_guess(int k) {
  if (k < 1) throw DimensionMismatchError("stage index must be >= 1");
  return CategoricalDistribution{
      std::vector<double>(static_cast<std::size_t>(k) + 1, 1.0 / (k + 1))};
}

}  // namespace covergame
