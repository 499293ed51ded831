#include "apxcount/numkernel/transforms.hpp"

#include <stdexcept>
#include <string>

namespace apxcount {

std::pair<Poly, Poly> laurent_split(const LaurentPoly& q) {
  std::vector<Rational> u, v;
  for (std::int64_t e = q.min_exp(); !q.is_zero() && e <= q.max_exp(); ++e) {
    const Rational& c = q.coeffs()[static_cast<std::size_t>(e - q.min_exp())];
    if (e >= 0) {
      if (u.size() <= static_cast<std::size_t>(e)) u.resize(static_cast<std::size_t>(e) + 1);
      u[static_cast<std::size_t>(e)] = c;
    } else {
      if (v.size() <= static_cast<std::size_t>(-e)) v.resize(static_cast<std::size_t>(-e) + 1);
      v[static_cast<std::size_t>(-e)] = c;
    }
  }
  return {Poly(std::move(u)), Poly(std::move(v))};
}

LaurentPoly laurent_join(const Poly& u, const Poly& v) {
  LaurentPoly out = LaurentPoly::from_poly(u);
  for (std::size_t i = 0; i < v.coeffs().size(); ++i)
    out += LaurentPoly::monomial(v.coeffs()[i], -static_cast<std::int64_t>(i));
  return out;
}

Poly symmetric_laurent_to_ordinary(const LaurentPoly& l) {
  const std::int64_t top = std::max(l.max_exp(), -l.min_exp());
  for (std::int64_t e = 1; e <= top; ++e)
    if (l.coeff(e) != l.coeff(-e))
      throw std::invalid_argument("not symmetric: coefficient of x^" + std::to_string(e) + " is " +
                                  to_string(l.coeff(e)) + " but coefficient of x^-" + std::to_string(e) + " is " +
                                  to_string(l.coeff(-e)));
  // Peel off the top exponent with a_i (x + 1/x)^i, highest first.
  LaurentPoly rest = l;
  std::vector<Rational> q(static_cast<std::size_t>(top) + 1);
  for (std::int64_t i = top; i >= 1; --i) {
    Rational a = rest.coeff(i);
    if (a == 0) continue;
    q[static_cast<std::size_t>(i)] = a;
    for (std::int64_t k = 0; k <= i; ++k)
      rest -= LaurentPoly::monomial(a * Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k))),
                                    i - 2 * k);
  }
  q[0] = rest.coeff(0);
  return Poly(std::move(q));
}

LaurentPoly substitute_x_plus_inv(const Poly& q) {
  const LaurentPoly s(-1, {Rational(1), Rational(0), Rational(1)});
  LaurentPoly acc;
  const auto& c = q.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + LaurentPoly::monomial(*it, 0);
  return acc;
}

LaurentPoly hyperbola_restrict(const BivarPoly& p, const Rational& a) {
  if (a == 0) throw std::invalid_argument("hyperbola_restrict: a must be nonzero");
  LaurentPoly out;
  for (std::size_t i = 0; i < p.rows().size(); ++i)
    for (std::size_t j = 0; j < p.rows()[i].size(); ++j) {
      const Rational& c = p.rows()[i][j];
      if (c == 0) continue;
      out += LaurentPoly::monomial(c * pow(a, static_cast<unsigned>(i + j)),
                                   static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j));
    }
  return out;
}

BivarPoly symmetrize_swap(const BivarPoly& p) { return (p + p.swapped()) * Rational(1, 2); }

}  // namespace apxcount
