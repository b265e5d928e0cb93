#pragma once

#include <span>
#include <vector>

#include "covergame/game.hpp"
#include "covergame/strategy.hpp"

namespace covergame {

/// Largest n accepted by the subset dynamic program (2^n table).
inline constexpr int kMaxDpN = 20;

/// Exact win probability via dynamic programming over rank subsets.
///
/// Every reveal order is an upward chain of visible-value sets; grouping the
/// enumeration by those sets gives T(S) = sum over r in S of
/// T(S \ {r}) * f_{|S|-1}(values of S \ {r})(j), where j counts the members
/// of S larger than r, with T = 1 on singletons. The result is T(full)/n!.
/// Agrees with exact_win_prob_enum within 1e-12 wherever both run, and
/// reaches n = 20 where enumeration cannot.
///
/// Subsets are processed level by level (increasing cardinality, ascending
/// bit pattern within a level) and each T(S) accumulates its terms in
/// ascending rank order, so results are bit-reproducible.
double dp_win_prob(const AdversaryInput& input);

/// Left-hand side of the stagewise inequality: the sum over i of the
/// probability the final-stage guess distribution built on all values except
/// x_i assigns to outcome i-1. Strictly exceeds 1 for distinct inputs.
double inequality_lhs(const AdversaryInput& input);

/// The same quantity in simplex coordinates: for an interior point
/// (p_0,...,p_n) with p_1 > ... > p_n, the sum of p_{i-1} / (sum - p_i).
/// Throws BoundaryPointError if any entry is 0, NotDescendingError if the
/// trailing entries are not strictly descending.
double inequality_lhs_simplex(const CategoricalDistribution& p);

/// The lower bound obtained by replacing every denominator with the largest
/// one (the sum omitting p_n); term i is p_{i-1} / (sum - p_n). The terms
/// total exactly 1, and term i < n is strictly below its counterpart in
/// inequality_lhs_simplex.
std::vector<double> common_denominator_bound_terms(
    const CategoricalDistribution& p);

/// Natural-parameter chart: interior (p_0,...,p_k) -> (log(p_1/p_0),...,
/// log(p_k/p_0)). Throws BoundaryPointError unless all entries are positive.
std::vector<double> recoordinatize(const CategoricalDistribution& p);

/// Inverse chart: x -> softmax(0, x), with no sorting. Mutually inverse with
/// recoordinatize on the open simplex.
CategoricalDistribution inverse_recoordinatize(std::span<const double> x);

}  // namespace covergame
