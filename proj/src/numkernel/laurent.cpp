#include "apxcount/numkernel/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace apxcount {

LaurentPoly::LaurentPoly(std::int64_t min_exp, std::vector<Rational> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) { return LaurentPoly(0, p.coeffs()); }

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t exponent) {
  return LaurentPoly(exponent, {c});
}

std::int64_t LaurentPoly::max_exp() const {
  return coeffs_.empty() ? 0 : min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(std::int64_t exponent) const {
  if (coeffs_.empty() || exponent < min_exp_ || exponent > max_exp()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

std::int64_t LaurentPoly::positive_degree() const { return coeffs_.empty() ? 0 : std::max<std::int64_t>(max_exp(), 0); }

std::int64_t LaurentPoly::negative_degree() const { return coeffs_.empty() ? 0 : -std::min<std::int64_t>(min_exp_, 0); }

Rational LaurentPoly::operator()(const Rational& x) const {
  if (coeffs_.empty()) return Rational(0);
  if (x == 0) {
    if (min_exp_ < 0) throw std::domain_error("Laurent polynomial with negative exponents evaluated at 0");
    return min_exp_ == 0 ? coeffs_.front() : Rational(0);
  }
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  if (min_exp_ >= 0) return acc * pow(x, static_cast<unsigned>(min_exp_));
  return acc / pow(x, static_cast<unsigned>(-min_exp_));
}

double LaurentPoly::eval(double x) const {
  if (coeffs_.empty()) return 0.0;
  if (x == 0.0 && min_exp_ < 0) throw std::domain_error("Laurent polynomial with negative exponents evaluated at 0");
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc * std::pow(x, static_cast<double>(min_exp_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::int64_t lo = std::min(min_exp_, other.min_exp_);
  std::int64_t hi = std::max(max_exp(), other.max_exp());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(other.min_exp_ - lo) + i] += other.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += other * Rational(-1); }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(out));
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

}  // namespace apxcount
