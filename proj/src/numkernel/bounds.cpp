#include "apxcount/numkernel/bounds.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <stdexcept>

namespace apxcount {
namespace {

struct Samples {
  Rational max;
  Rational min;
  Rational ratio;  // deg^2 / grid; 0 when the samples are already exact
};

// Samples p at a + (b-a) t / grid for t = 0..grid. The polynomial is first
// rewritten in t with integer coefficients so each sample is an mpz Horner
// pass rather than a rational one.
Samples sample(const Poly& p, const Rational& a, const Rational& b, std::size_t grid) {
  if (!(a < b)) throw std::invalid_argument("interval requires a < b");
  const std::size_t n = p.degree_or_zero();
  if (n <= 1) {
    Rational pa = p(a), pb = p(b);
    return {std::max(pa, pb), std::min(pa, pb), Rational(0)};
  }
  if (grid == 0) grid = 64 * n;
  grid = std::max<std::size_t>(grid, 2);
  Rational ratio(static_cast<unsigned long>(n * n), static_cast<unsigned long>(grid));
  ratio.canonicalize();
  if (ratio > Rational(1, 4)) {
    grid = 4 * n * n;
    ratio = Rational(1, 4);
  }
  Rational step = (b - a) / static_cast<unsigned long>(grid);
  Poly q = compose_affine(p, step, a);
  BigInt denom = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) ints.push_back(c.get_num() * (denom / c.get_den()));

  BigInt best_hi, best_lo, acc;
  for (std::size_t t = 0; t <= grid; ++t) {
    acc = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) {
      acc *= static_cast<unsigned long>(t);
      acc += *it;
    }
    if (t == 0 || acc > best_hi) best_hi = acc;
    if (t == 0 || acc < best_lo) best_lo = acc;
  }
  return {make_rational(best_hi, denom), make_rational(best_lo, denom), ratio};
}

// With every point within step/2 of a sample, Markov's inequality gives
// true_osc <= sampled_osc + ratio * true_osc, so
// true_osc <= sampled_osc / (1 - ratio), and each extreme is off by at most
// ratio/2 of that.
Rational slack(const Samples& s) {
  if (s.ratio == 0) return Rational(0);
  return s.ratio * (s.max - s.min) / (2 * (1 - s.ratio));
}

}  // namespace

std::size_t default_grid(const Poly& p) { return std::max<std::size_t>(64 * p.degree_or_zero(), 2); }

IntervalBound interval_extremum(const Poly& p, const Rational& a, const Rational& b, std::size_t grid) {
  Samples s = sample(p, a, b, grid);
  return {s.max, s.max + slack(s), true};
}

IntervalBound interval_minimum(const Poly& p, const Rational& a, const Rational& b, std::size_t grid) {
  Samples s = sample(p, a, b, grid);
  return {s.min - slack(s), s.min, true};
}

IntervalBound interval_oscillation(const Poly& p, const Rational& a, const Rational& b, std::size_t grid) {
  Samples s = sample(p, a, b, grid);
  Rational osc = s.max - s.min;
  if (s.ratio == 0) return {osc, osc, true};
  return {osc, osc / (1 - s.ratio), true};
}

IntervalBound interval_abs_max(const Poly& p, const Rational& a, const Rational& b, std::size_t grid) {
  Samples s = sample(p, a, b, grid);
  Rational e = slack(s);
  Rational lo = std::max(abs(s.max), abs(s.min));
  Rational hi = std::max(abs(Rational(s.max + e)), abs(Rational(s.min - e)));
  return {lo, hi, true};
}

Rational markov_bound(const Poly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("markov_bound requires a < b");
  const std::size_t n = p.degree_or_zero();
  if (n == 0) return Rational(0);
  Samples s = sample(p, a, b, 0);
  return (s.max - s.min) / (b - a) * static_cast<unsigned long>(n * n);
}

Rational markov_bound_certified(const Poly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("markov_bound requires a < b");
  const std::size_t n = p.degree_or_zero();
  if (n == 0) return Rational(0);
  return interval_oscillation(p, a, b).hi / (b - a) * static_cast<unsigned long>(n * n);
}

HighPrecision paturi_bound(std::size_t d, const Rational& mu) {
  if (mu < 0) throw std::invalid_argument("paturi_bound requires mu >= 0");
  HighPrecision m = to_high_precision(mu);
  return boost::multiprecision::exp(2 * HighPrecision(d) * boost::multiprecision::sqrt(2 * m + m * m));
}

}  // namespace apxcount
