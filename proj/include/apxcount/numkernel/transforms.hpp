#pragma once

#include "apxcount/numkernel/bivar.hpp"
#include "apxcount/numkernel/laurent.hpp"
#include "apxcount/numkernel/poly.hpp"

#include <utility>

namespace apxcount {

/// q(k) = u(k) + v(1/k). u keeps the constant term; v(0) = 0.
std::pair<Poly, Poly> laurent_split(const LaurentPoly& q);

/// Inverse of laurent_split: u(k) + v(1/k) as a Laurent polynomial.
LaurentPoly laurent_join(const Poly& u, const Poly& v);

/// For l with l(x) = l(1/x), returns q with l(x) = q(x + 1/x).
/// Throws std::invalid_argument naming the first exponent whose mirror
/// coefficient differs.
Poly symmetric_laurent_to_ordinary(const LaurentPoly& l);

/// q(x + 1/x) expanded as a Laurent polynomial.
LaurentPoly substitute_x_plus_inv(const Poly& q);

/// l(t) = p(a t, a / t). Rejects a = 0.
LaurentPoly hyperbola_restrict(const BivarPoly& p, const Rational& a);

/// (p(x,y) + p(y,x)) / 2.
BivarPoly symmetrize_swap(const BivarPoly& p);

}  // namespace apxcount
