#include "apxcount/numkernel/bivar.hpp"

#include <cmath>

namespace apxcount {

BivarPoly::BivarPoly(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) { normalize(); }

BivarPoly BivarPoly::x() { return monomial(Rational(1), 1, 0); }
BivarPoly BivarPoly::y() { return monomial(Rational(1), 0, 1); }
BivarPoly BivarPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const Rational& c, std::size_t i, std::size_t j) {
  std::vector<std::vector<Rational>> rows(i + 1);
  rows[i].resize(j + 1);
  rows[i][j] = c;
  return BivarPoly(std::move(rows));
}

std::optional<std::size_t> BivarPoly::total_degree() const {
  if (rows_.empty()) return std::nullopt;
  return rows_.size() - 1;
}

Rational BivarPoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= rows_[i].size()) return Rational(0);
  return rows_[i][j];
}

Rational BivarPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc;
  for (std::size_t i = rows_.size(); i-- > 0;) {
    Rational row;
    for (auto it = rows_[i].rbegin(); it != rows_[i].rend(); ++it) {
      row *= y;
      row += *it;
    }
    acc = acc * x + row;
  }
  return acc;
}

double BivarPoly::eval(double x, double y) const {
  double acc = 0.0;
  for (std::size_t i = rows_.size(); i-- > 0;) {
    double row = 0.0;
    for (auto it = rows_[i].rbegin(); it != rows_[i].rend(); ++it) row = row * y + it->get_d();
    acc = acc * x + row;
  }
  return acc;
}

BivarPoly BivarPoly::swapped() const {
  std::vector<std::vector<Rational>> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (out[j].size() <= i) out[j].resize(i + 1);
      out[j][i] = rows_[i][j];
    }
  return BivarPoly(std::move(out));
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  if (other.rows_.size() > rows_.size()) rows_.resize(other.rows_.size());
  for (std::size_t i = 0; i < other.rows_.size(); ++i) {
    if (other.rows_[i].size() > rows_[i].size()) rows_[i].resize(other.rows_[i].size());
    for (std::size_t j = 0; j < other.rows_[i].size(); ++j) rows_[i][j] += other.rows_[i][j];
  }
  normalize();
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& s) {
  for (auto& row : rows_)
    for (auto& c : row) c *= s;
  normalize();
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::vector<Rational>> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i1 = 0; i1 < a.rows_.size(); ++i1)
    for (std::size_t j1 = 0; j1 < a.rows_[i1].size(); ++j1) {
      if (a.rows_[i1][j1] == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows_.size(); ++i2)
        for (std::size_t j2 = 0; j2 < b.rows_[i2].size(); ++j2) {
          auto& row = out[i1 + i2];
          if (row.size() <= j1 + j2) row.resize(j1 + j2 + 1);
          row[j1 + j2] += a.rows_[i1][j1] * b.rows_[i2][j2];
        }
    }
  return BivarPoly(std::move(out));
}

void BivarPoly::normalize() {
  std::size_t degree = 0;
  bool any = false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] != 0) {
        any = true;
        degree = std::max(degree, i + j);
      }
  if (!any) {
    rows_.clear();
    return;
  }
  rows_.resize(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) rows_[i].resize(degree + 1 - i);
}

}  // namespace apxcount
