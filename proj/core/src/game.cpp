#include "covergame/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace covergame {

AdversaryInput::AdversaryInput(std::vector<double> raw)
    : entered_(std::move(raw)) {
  if (entered_.size() < 2) {
    throw TooFewValuesError("need at least 2 values, got " +
                            std::to_string(entered_.size()));
  }
  for (double v : entered_) {
    if (!std::isfinite(v)) {
      throw NonFiniteInputError("values must be finite");
    }
  }
  values_ = entered_;
  std::sort(values_.begin(), values_.end(), std::greater<>());
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == values_[i - 1]) {
      throw DuplicateValuesError("values must be pairwise distinct");
    }
  }
}

int sample_outcome(const CategoricalDistribution& dist, double u) {
  double cumulative = 0.0;
  const int last = dist.outcomes() - 1;
  for (int j = 0; j < last; ++j) {
    cumulative += dist.probs[j];
    if (u < cumulative) return j;
  }
  return last;  // absorbs rounding in the final bucket
}

GameTranscript play_game(const AdversaryInput& input, const Permutation& sigma,
                         RngStream& rng) {
  const int n = input.size();
  if (sigma.size() != n) {
    throw DimensionMismatchError("permutation has " +
                                 std::to_string(sigma.size()) +
                                 " entries, input has " + std::to_string(n));
  }

  const LehmerCode code = lehmer_encode(sigma);
  GameTranscript transcript{input, sigma, {}, true, 0};
  std::vector<double> visible;
  visible.reserve(n);
  visible.push_back(input.value_of_rank(sigma.rank_at_time(1)));

  for (int k = 1; k <= n - 1; ++k) {
    StageRecord stage;
    stage.stage = k;
    stage.visible = visible;
    stage.guess_dist = softmax_guess(visible);
    stage.draw = rng.next_unit();
    stage.guess = sample_outcome(stage.guess_dist, stage.draw);
    stage.truth = code.entries[k];  // c_{k+1}
    stage.correct = stage.guess == stage.truth;
    transcript.stages.push_back(std::move(stage));

    if (!transcript.stages.back().correct) {
      transcript.win = false;
      transcript.loss_stage = k;
      break;
    }
    visible.push_back(input.value_of_rank(sigma.rank_at_time(k + 1)));
  }
  return transcript;
}

double exact_win_prob_enum(const AdversaryInput& input) {
  return exact_win_prob_enum(input, [](std::span<const double> visible) {
    return softmax_guess(visible);
  });
}

double exact_win_prob_enum(const AdversaryInput& input,
                           const StageStrategy& strategy) {
  const int n = input.size();
  if (n > kMaxEnumerationN) {
    throw NTooLargeError("enumeration capped at n = " +
                         std::to_string(kMaxEnumerationN) + ", got " +
                         std::to_string(n));
  }

  const std::vector<double>& values = input.values();
  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1);

  double total = 0.0;
  std::vector<double> visible;
  visible.reserve(n);
  // Reveal-rank sequences in lexicographic order, matching
  // enumerate_permutations.
  do {
    visible.clear();
    visible.push_back(values[ranks[0] - 1]);
    double product = 1.0;
    for (int k = 1; k <= n - 1; ++k) {
      int truth = 0;  // visible items larger than the next reveal
      for (int s = 0; s < k; ++s) {
        if (ranks[s] < ranks[k]) ++truth;
      }
      product *= strategy(visible).probs[truth];
      visible.push_back(values[ranks[k] - 1]);
    }
    total += product;
  } while (std::next_permutation(ranks.begin(), ranks.end()));

  return total / static_cast<double>(factorial(n));
}

double uniform_baseline(int n) {
  return 1.0 / static_cast<double>(factorial(n));
}

McResult mc_estimate(const AdversaryInput& input, std::uint64_t trials,
                     std::uint64_t seed) {
  if (trials < 1) throw InvalidConfigError("trials must be >= 1");

  const int n = input.size();
  std::uint64_t wins = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RngStream stream = RngStream::derived(seed, t);
    const Permutation sigma = sample_permutation(n, stream);
    if (play_game(input, sigma, stream).win) ++wins;
  }

  const double estimate =
      static_cast<double>(wins) / static_cast<double>(trials);
  const double standard_error =
      std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
  return McResult{estimate, wins, standard_error, trials, seed};
}

}  // namespace covergame
