#pragma once

#include "apxcount/numkernel/bivar.hpp"
#include "apxcount/numkernel/poly.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace apxcount {

/// Sparse multilinear polynomial over Boolean variables x_0..x_{n-1}; a term
/// is keyed by the bitmask of its variables. Zero coefficients are never stored.
class MultilinearPoly {
 public:
  static constexpr unsigned max_vars = 24;

  explicit MultilinearPoly(unsigned n_vars);

  unsigned n_vars() const { return n_vars_; }
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
  unsigned degree() const;

  /// Adds c * prod_{i in mask} x_i. Rejects masks with bits >= n_vars.
  MultilinearPoly& add_term(std::uint32_t mask, const Rational& c);

  /// Value on the Boolean input whose set bits are the true variables.
  Rational operator()(std::uint32_t input) const;

 private:
  unsigned n_vars_;
  std::map<std::uint32_t, Rational> terms_;
};

/// q(k) = E_{|X|=k} p(X) for k = 0..n, as a polynomial in k.
Poly mp_symmetrize(const MultilinearPoly& p);

/// Every variable replaced by the same k.
Poly eas_symmetrize(const MultilinearPoly& p);

/// For r on 2N variables (first N = oracle 0, last N = oracle 1) returns
/// q(s,t) (erase-all-subscripts with s/N, t/N per block) and p(x,y)
/// (per-block weight averaging).
std::pair<BivarPoly, BivarPoly> two_oracle_symmetrize(const MultilinearPoly& r, unsigned N);

/// Direct average of p over all weight-k inputs (n_vars <= 20).
Rational brute_force_weight_average(const MultilinearPoly& p, unsigned k);

}  // namespace apxcount
