#include "covergame/evaluator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace covergame {
namespace {

void check_simplex_point(const CategoricalDistribution& p) {
  validate(p);
  if (p.outcomes() < 2) {
    throw DimensionMismatchError("simplex point needs at least 2 entries");
  }
  for (double v : p.probs) {
    if (v <= 0.0) {
      throw BoundaryPointError("point must lie in the open simplex");
    }
  }
}

}  // namespace

double dp_win_prob(const AdversaryInput& input) {
  const int n = input.size();
  if (n > kMaxDpN) {
    throw NTooLargeError("subset DP capped at n = " + std::to_string(kMaxDpN) +
                         ", got " + std::to_string(n));
  }
  const std::vector<double>& values = input.values();

  // One global shift keeps every exponential in range; values[0] is the
  // maximum since the input is descending.
  const double shift = std::max(0.0, values[0]);
  const double zero_weight = std::exp(-shift);
  std::vector<double> weight(n);
  for (int i = 0; i < n; ++i) weight[i] = std::exp(values[i] - shift);

  const std::uint32_t full = (1u << n) - 1;

  // denom[s]: softmax denominator when exactly the ranks in s are visible.
  std::vector<double> denom(full + 1);
  denom[0] = zero_weight;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (0u - s);
    denom[s] = denom[s ^ low] + weight[std::countr_zero(low)];
  }

  std::vector<double> table(full + 1, 0.0);
  for (int i = 0; i < n; ++i) table[1u << i] = 1.0;

  for (int level = 2; level <= n; ++level) {
    // Gosper's hack: subsets of a given cardinality in ascending bit order.
    std::uint32_t s = (1u << level) - 1;
    while (s <= full) {
      double acc = 0.0;
      for (std::uint32_t rest = s; rest != 0;) {
        const std::uint32_t bit = rest & (0u - rest);
        rest ^= bit;
        const std::uint32_t prev = s ^ bit;  // visible set before this reveal
        // Larger visible items are the lower-numbered ranks; the guess
        // outcome's weight is that of the smallest visible item above the
        // revealed one (the highest set bit below `bit`), or the leading
        // zero when the reveal is a new maximum.
        const std::uint32_t larger = prev & (bit - 1);
        const double numerator =
            larger ? weight[std::bit_width(larger) - 1] : zero_weight;
        acc += table[prev] * (numerator / denom[prev]);
      }
      table[s] = acc;

      const std::uint32_t c = s & (0u - s);
      const std::uint32_t r = s + c;
      s = (((s ^ r) >> 2) / c) | r;
    }
  }

  return table[full] / static_cast<double>(factorial(n));
}

double inequality_lhs(const AdversaryInput& input) {
  const int n = input.size();
  const std::vector<double>& values = input.values();
  double sum = 0.0;
  std::vector<double> rest;
  rest.reserve(n - 1);
  for (int i = 1; i <= n; ++i) {
    rest.clear();
    for (int j = 0; j < n; ++j) {
      if (j != i - 1) rest.push_back(values[j]);
    }
    sum += softmax_guess(rest).probs[i - 1];
  }
  return sum;
}

double inequality_lhs_simplex(const CategoricalDistribution& p) {
  check_simplex_point(p);
  const std::vector<double>& probs = p.probs;
  const int n = p.outcomes() - 1;
  for (int i = 2; i <= n; ++i) {
    if (!(probs[i - 1] > probs[i])) {
      throw NotDescendingError(
          "trailing coordinates must be strictly descending");
    }
  }

  double total = 0.0;
  for (double v : probs) total += v;

  double lhs = 0.0;
  for (int i = 1; i <= n; ++i) {
    lhs += probs[i - 1] / (total - probs[i]);
  }
  return lhs;
}

std::vector<double> common_denominator_bound_terms(
    const CategoricalDistribution& p) {
  check_simplex_point(p);
  const std::vector<double>& probs = p.probs;
  const int n = p.outcomes() - 1;

  double total = 0.0;
  for (double v : probs) total += v;
  const double denom = total - probs[n];

  std::vector<double> terms(n);
  for (int i = 1; i <= n; ++i) terms[i - 1] = probs[i - 1] / denom;
  return terms;
}

std::vector<double> recoordinatize(const CategoricalDistribution& p) {
  check_simplex_point(p);
  std::vector<double> x(p.outcomes() - 1);
  for (std::size_t i = 1; i < p.probs.size(); ++i) {
    x[i - 1] = std::log(p.probs[i] / p.probs[0]);
  }
  return x;
}

CategoricalDistribution inverse_recoordinatize(std::span<const double> x) {
  if (x.empty()) {
    throw DimensionMismatchError("need at least one coordinate");
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw NonFiniteInputError("coordinates must be finite");
    }
  }
  std::vector<double> weights;
  weights.reserve(x.size() + 1);
  weights.push_back(0.0);
  weights.insert(weights.end(), x.begin(), x.end());
  return CategoricalDistribution{stable_softmax(weights)};
}

}  // namespace covergame
