#pragma once

#include "apxcount/numkernel/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace apxcount {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[i] is the coefficient of x^i; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and degree() == std::nullopt.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t exponent);
  static Poly identity();  // x

  /// Empty for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const;
  /// Degree, treating the zero polynomial as degree 0. For bound formulas only.
  std::size_t degree_or_zero() const;
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  Poly derivative() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned exponent);

/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

/// q(x) = p(a*x + b).
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

/// Chebyshev polynomial of the first kind, T_d.
Poly chebyshev(std::size_t d);

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]), via
/// exact Newton divided differences. Nodes must be distinct.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// x (x - 1) ... (x - k + 1).
Poly falling_factorial(std::size_t k);

}  // namespace apxcount
