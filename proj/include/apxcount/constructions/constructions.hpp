#pragma once

#include "apxcount/numkernel/bounds.hpp"
#include "apxcount/numkernel/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace apxcount {

/// Approximant in x = 1/k: small on k <= w, large on k >= 2w.
struct FedjaPoly {
  std::int64_t w = 0;
  std::int64_t d = 0;  // ceil(w^(1/3))
  bool perfect_cube = false;
  Poly u;          // prod_{m=1..d} (1 - m x)
  Poly v;          // (1 + T_d(A(x))) / 2, A(1/w) = 1, A(1/d) = -1
  Rational jump;   // T_d(A(1/(2w))): the growth just past 1/w
  Rational scale;  // p(0); the amplifier is applied to y = u v / scale
  Poly amplifier;  // quartic g fitted per w
  Rational amplifier_margin;
  Poly assembled;  // g(u v / scale), degree 8d
};

/// Requires w >= 8.
FedjaPoly fedja_construct(std::int64_t w);

struct FedjaViolation {
  std::string region;  // "no", "mid" or "yes"
  std::int64_t k = 0;
  Rational value;
};

struct FedjaReport {
  std::int64_t w = 0, k_max = 0;
  std::size_t degree = 0;
  bool degree_ok = false;   // degree <= 8 ceil(w^(1/3))
  bool u_zeros_ok = false;  // u(1/k) = 0 for k = 1..d
  IntervalBound u_min, u_max;  // u on [0, 1/d]
  bool no_ok = false, mid_ok = false, yes_points_ok = false;
  IntervalBound yes_min, yes_max;  // assembled on [0, 1/(2w)]
  bool yes_certified = false;      // yes_min.lo >= 2/3 and yes_max.hi <= 1
  Rational constant_term;
  std::vector<FedjaViolation> violations;
  bool ok() const { return degree_ok && u_zeros_ok && no_ok && mid_ok && yes_points_ok && yes_certified; }
};

/// Exact checks at x = 1/k for k = 1..k_max plus a certified enclosure on
/// (0, 1/(2w)]; grid = 0 picks 16 deg^2 samples. Requires k_max >= 2w.
FedjaReport fedja_verify(const FedjaPoly& fp, std::int64_t k_max, std::size_t grid = 0);

/// P(l) = T_m(1 + 2w/N - l/N), m = ceil(sqrt(N/w)); the literal variant
/// divides l by wN instead of N.
Poly chebyshev_counting_poly(std::int64_t N, std::int64_t w, bool paper_variant = false);

struct ChebCountReport {
  std::int64_t N = 0, w = 0;
  std::size_t degree = 0;
  Rational at_w;
  bool at_w_ok = false;      // P(w) >= 2
  Rational max_abs_tail;     // max |P(l)|, l = 2w..N
  bool bounded_ok = false;   // max_abs_tail <= 1
  std::vector<std::int64_t> unbounded_points;
  // best affine rescale q = alpha P + beta against targets q(w) = 1,
  // q(2w) = -1, |q(l)| <= 1 + eps on l = 1..N
  Rational alpha, beta, epsilon;
  Poly rescaled;
};

ChebCountReport chebyshev_counting_check(const Poly& P, std::int64_t N, std::int64_t w);

}  // namespace apxcount
