#pragma once

#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "covergame/errors.hpp"
#include "covergame/rng.hpp"

namespace covergame {

class RngStream;

/// A permutation of {1,...,n} describing in which order n ranked items are
/// revealed. Two equivalent views are kept:
///
///   - reveal_of_rank: rank r (1 = largest item) -> the time at which it is
///     revealed. This is the permutation sigma itself.
///   - reveal_ranks: time t -> the rank revealed at time t (sigma^{-1}).
///
/// All ranks and times are 1-based, matching the serialized form.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation reversal(int n);

  /// Builds from sigma: entry r-1 holds the reveal time of rank r.
  static Permutation from_reveal_of_rank(std::vector<int> times);

  /// Builds from sigma^{-1}: entry t-1 holds the rank revealed at time t.
  static Permutation from_reveal_ranks(std::vector<int> ranks);

  int size() const noexcept { return static_cast<int>(time_of_rank_.size()); }

  int time_of_rank(int rank) const { return time_of_rank_[rank - 1]; }
  int rank_at_time(int time) const { return rank_at_time_[time - 1]; }

  const std::vector<int>& reveal_of_rank() const noexcept { return time_of_rank_; }
  const std::vector<int>& reveal_ranks() const noexcept { return rank_at_time_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation(std::vector<int> time_of_rank, std::vector<int> rank_at_time)
      : time_of_rank_(std::move(time_of_rank)),
        rank_at_time_(std::move(rank_at_time)) {}

  std::vector<int> time_of_rank_;
  std::vector<int> rank_at_time_;
};

/// Lehmer code (c_1,...,c_n): c_1 = 0 and c_{k+1} is the number of
/// already-revealed items strictly larger than the one revealed at time k+1.
/// Entry k satisfies 0 <= c_k <= k-1; the code is bijective with S_n.
struct LehmerCode {
  std::vector<int> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;
};

/// Throws InvalidCodeError unless `code` satisfies the range invariants.
void validate(const LehmerCode& code);

LehmerCode lehmer_encode(const Permutation& sigma);
Permutation lehmer_decode(const LehmerCode& code);

/// Largest n accepted by full-enumeration routines (n! blow-up).
inline constexpr int kMaxEnumerationN = 10;

/// n! for n <= 20.
std::uint64_t factorial(int n);

/// Lazy range over all permutations of {1,...,n}, in lexicographic order of
/// the reveal-rank sequence (identity first, reversal last).
/// Throws NTooLargeError for n > kMaxEnumerationN.
class PermutationRange {
 public:
  explicit PermutationRange(int n);

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class PermutationRange;
    explicit iterator(int n);

    std::vector<int> ranks_;
    Permutation current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

PermutationRange enumerate_permutations(int n);

/// Uniformly random permutation of {1,...,n} (unbiased shuffle on the
/// reveal-rank sequence). Deterministic given the stream state.
Permutation sample_permutation(int n, RngStream& rng);

}  // namespace covergame
