#pragma once

#include "apxcount/numkernel/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace apxcount {

/// Bivariate polynomial sum c_{ij} x^i y^j, stored as a triangular table:
/// row i holds the coefficients of x^i y^0, x^i y^1, ... up to total degree.
class BivarPoly {
 public:
  BivarPoly() = default;
  /// Rows may be ragged; anything beyond the true total degree is trimmed.
  explicit BivarPoly(std::vector<std::vector<Rational>> rows);

  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly constant(const Rational& c);
  static BivarPoly monomial(const Rational& c, std::size_t i, std::size_t j);

  /// Empty for the zero polynomial.
  std::optional<std::size_t> total_degree() const;
  bool is_zero() const { return rows_.empty(); }
  Rational coeff(std::size_t i, std::size_t j) const;
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  Rational operator()(const Rational& x, const Rational& y) const;
  double eval(double x, double y) const;

  /// p(y, x).
  BivarPoly swapped() const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator*=(const Rational& s);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a += b * Rational(-1); }
  friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.rows_ == b.rows_; }

 private:
  void normalize();
  // rows_[i].size() == degree + 1 - i for every i <= degree
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace apxcount
