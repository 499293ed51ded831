#pragma once

#include "apxcount/numkernel/poly.hpp"

#include <cstdint>
#include <vector>

namespace apxcount {

/// Laurent polynomial sum_{e} c_e x^e with exact coefficients stored from
/// min_exp upward. Both ends are trimmed, so the first and last stored
/// coefficients are nonzero; the zero polynomial has min_exp 0 and no coeffs.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t min_exp, std::vector<Rational> coeffs);

  static LaurentPoly from_poly(const Poly& p);
  static LaurentPoly monomial(const Rational& c, std::int64_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t max_exp() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::int64_t exponent) const;

  // D2 = max(max exponent, 0), D1 = -min(min exponent, 0).
  std::int64_t positive_degree() const;
  std::int64_t negative_degree() const;

  /// Throws std::domain_error at x = 0 when a negative exponent is present.
  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::int64_t min_exp_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace apxcount
