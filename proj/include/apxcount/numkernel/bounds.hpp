#pragma once

#include "apxcount/numkernel/poly.hpp"

#include <cstddef>

namespace apxcount {

/// Enclosure [lo, hi] of some extremal quantity. When certified, the true
/// value is guaranteed to lie in [lo, hi].
struct IntervalBound {
  Rational lo;
  Rational hi;
  bool certified = false;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// 64 * deg(p), at least 2.
std::size_t default_grid(const Poly& p);

/// Enclosure of max_{x in [a,b]} p(x). lo is the best sample on an equispaced
/// grid (grid = 0 selects default_grid); hi adds a Markov-inequality slack
/// derived from the sampled oscillation. The grid is refined automatically
/// when it is too coarse for the slack to be finite.
IntervalBound interval_extremum(const Poly& p, const Rational& a, const Rational& b, std::size_t grid = 0);

/// Enclosure of min_{x in [a,b]} p(x) (lo is the certified side).
IntervalBound interval_minimum(const Poly& p, const Rational& a, const Rational& b, std::size_t grid = 0);

/// Enclosure of max_{x,y in [a,b]} |p(x) - p(y)|.
IntervalBound interval_oscillation(const Poly& p, const Rational& a, const Rational& b, std::size_t grid = 0);

/// Enclosure of max_{x in [a,b]} |p(x)|.
IntervalBound interval_abs_max(const Poly& p, const Rational& a, const Rational& b, std::size_t grid = 0);

/// H / (b - a) * deg(p)^2 with H the sampled oscillation of p on [a,b].
Rational markov_bound(const Poly& p, const Rational& a, const Rational& b);

/// Same, with H replaced by the certified upper bound on the oscillation.
Rational markov_bound_certified(const Poly& p, const Rational& a, const Rational& b);

/// exp(2 d sqrt(2 mu + mu^2)); not exact.
HighPrecision paturi_bound(std::size_t d, const Rational& mu);

}  // namespace apxcount
