#include "covergame/permutation.hpp"

#include <algorithm>

namespace covergame {
namespace {

std::vector<int> invert(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    inv[perm[i] - 1] = i + 1;
  }
  return inv;
}

void check_is_permutation(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  if (n < 1) {
    throw InvalidPermutationError("permutation must have at least one entry");
  }
  std::vector<bool> seen(n, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw InvalidPermutationError(
          "entries must be a bijection on {1,...," + std::to_string(n) + "}");
    }
    seen[v - 1] = true;
  }
}

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  return from_reveal_ranks(std::move(id));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> rev(n);
  for (int t = 0; t < n; ++t) rev[t] = n - t;
  return from_reveal_ranks(std::move(rev));
}

Permutation Permutation::from_reveal_of_rank(std::vector<int> times) {
  check_is_permutation(times);
  std::vector<int> ranks = invert(times);
  return Permutation(std::move(times), std::move(ranks));
}

Permutation Permutation::from_reveal_ranks(std::vector<int> ranks) {
  check_is_permutation(ranks);
  std::vector<int> times = invert(ranks);
  return Permutation(std::move(times), std::move(ranks));
}

void validate(const LehmerCode& code) {
  const int n = code.size();
  if (n < 1) throw InvalidCodeError("code must be nonempty");
  for (int k = 1; k <= n; ++k) {
    const int c = code.entries[k - 1];
    if (c < 0 || c > k - 1) {
      throw InvalidCodeError("entry c_" + std::to_string(k) + " = " +
                             std::to_string(c) + " outside {0,...," +
                             std::to_string(k - 1) + "}");
    }
  }
}

LehmerCode lehmer_encode(const Permutation& sigma) {
  const int n = sigma.size();
  const std::vector<int>& ranks = sigma.reveal_ranks();
  LehmerCode code;
  code.entries.resize(n);
  for (int t = 0; t < n; ++t) {
    int count = 0;
    for (int s = 0; s < t; ++s) {
      if (ranks[s] < ranks[t]) ++count;  // smaller rank = larger item
    }
    code.entries[t] = count;
  }
  return code;
}

Permutation lehmer_decode(const LehmerCode& code) {
  validate(code);
  const int n = code.size();
  // Shifting placement: item i lands at P[n - i + c_i + 1] after sliding the
  // displaced entries one slot left (1-based array).
  std::vector<int> p(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    const int c = code.entries[i - 1];
    for (int j = 1; j <= c; ++j) {
      p[n - i + j] = p[n - i + j + 1];
    }
    p[n - i + c + 1] = i;
  }
  std::vector<int> times(p.begin() + 1, p.begin() + 1 + n);
  return Permutation::from_reveal_of_rank(std::move(times));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) {
    throw NTooLargeError("factorial supports 0 <= n <= 20, got " +
                         std::to_string(n));
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

PermutationRange::PermutationRange(int n) : n_(n) {
  if (n < 1) throw InvalidPermutationError("enumeration needs n >= 1");
  if (n > kMaxEnumerationN) {
    throw NTooLargeError("enumeration capped at n = " +
                         std::to_string(kMaxEnumerationN) + ", got " +
                         std::to_string(n));
  }
}

PermutationRange::iterator::iterator(int n)
    : ranks_(n), current_(Permutation::identity(n)) {
  std::iota(ranks_.begin(), ranks_.end(), 1);
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  if (std::next_permutation(ranks_.begin(), ranks_.end())) {
    current_ = Permutation::from_reveal_ranks(ranks_);
  } else {
    done_ = true;
  }
  return *this;
}

PermutationRange enumerate_permutations(int n) { return PermutationRange(n); }

Permutation sample_permutation(int n, RngStream& rng) {
  if (n < 2) throw InvalidPermutationError("sampling needs n >= 2");
  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(i + 1)));
    std::swap(ranks[i], ranks[j]);
  }
  return Permutation::from_reveal_ranks(std::move(ranks));
}

}  // namespace covergame
