#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "covergame/permutation.hpp"
#include "covergame/rng.hpp"
#include "covergame/strategy.hpp"

namespace covergame {

/// The adversary's n distinct finite reals, stored strictly descending so
/// that index i holds the rank-(i+1) value. The order in which the values
/// were supplied is kept for display only and never affects results.
class AdversaryInput {
 public:
  /// Sorts descending and validates. Throws TooFewValuesError,
  /// DuplicateValuesError or NonFiniteInputError.
  explicit AdversaryInput(std::vector<double> raw);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& as_entered() const noexcept { return entered_; }

  double value_of_rank(int rank) const { return values_[rank - 1]; }

 private:
  std::vector<double> values_;
  std::vector<double> entered_;
};

inline AdversaryInput make_input(std::vector<double> raw) {
  return AdversaryInput(std::move(raw));
}

struct StageRecord {
  int stage = 0;                       // k, in {1,...,n-1}
  std::vector<double> visible;         // values seen so far, reveal order
  CategoricalDistribution guess_dist;  // softmax_guess(visible)
  double draw = 0.0;                   // the uniform variate used to sample
  int guess = 0;
  int truth = 0;                       // code entry c_{k+1}
  bool correct = false;
};

/// Record of one play-through. `stages` stops at the first incorrect guess;
/// the game is won iff all n-1 stages are present and correct.
struct GameTranscript {
  AdversaryInput input;
  Permutation sigma;
  std::vector<StageRecord> stages;
  bool win = false;
  int loss_stage = 0;  // 0 when won, else the failing stage index
};

/// Inverse-CDF sample from `dist` with a single uniform draw u in [0,1):
/// the smallest outcome whose cumulative probability exceeds u.
int sample_outcome(const CategoricalDistribution& dist, double u);

/// Plays one game: items are revealed in sigma-order and each stage guess is
/// sampled from the softmax stage distribution with one uniform draw.
/// Throws DimensionMismatchError if sigma.size() != input.size().
GameTranscript play_game(const AdversaryInput& input, const Permutation& sigma,
                         RngStream& rng);

/// A per-stage guessing rule: visible values (reveal order) -> distribution
/// on {0,...,k}.
using StageStrategy =
    std::function<CategoricalDistribution(std::span<const double>)>;

/// Exact win probability by full enumeration: the average over all n!
/// reveal orders of the product of per-stage probabilities assigned to the
/// true code entries. Permutations are visited in enumeration order and the
/// sum is accumulated in that fixed sequence.
/// Throws NTooLargeError for n > kMaxEnumerationN.
double exact_win_prob_enum(const AdversaryInput& input);

/// As above with a caller-supplied stage strategy (uniform_guess reproduces
/// the 1/n! baseline exactly).
double exact_win_prob_enum(const AdversaryInput& input,
                           const StageStrategy& strategy);

/// 1/n!.
double uniform_baseline(int n);

struct McResult {
  double estimate = 0.0;
  std::uint64_t wins = 0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate over `trials` independent games. Trial t draws from
/// RngStream::derived(seed, t), so the result is independent of how trials
/// might be partitioned and is reproducible for a fixed seed.
McResult mc_estimate(const AdversaryInput& input, std::uint64_t trials,
                     std::uint64_t seed);

}  // namespace covergame
