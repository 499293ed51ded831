#pragma once

#include "apxcount/numkernel/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace apxcount {

struct WitnessParams {
  std::int64_t N = 0, w = 0, c = 0;
  std::int64_t d1 = 0;  // floor((w/c)^(1/3))
  std::int64_t d2 = 0;  // floor(sqrt(N/(c w)))
};

/// Validates 1 <= w, 2w < N, c >= 2 and derives d1, d2.
WitnessParams make_params(std::int64_t N, std::int64_t w, std::int64_t c);

struct SupportSet {
  std::vector<std::int64_t> t1;    // floor(w/(c i^2)), i = 1..d1, ascending
  std::vector<std::int64_t> t2;    // c i^2 w, i = 1..d2, ascending
  std::vector<std::int64_t> full;  // {w, 2w} U t1 U t2, ascending, no repeats
};

/// Throws std::logic_error if two elements of t1 coincide.
SupportSet build_support(const WitnessParams& params);

struct DualWitness {
  WitnessParams params;
  SupportSet support;
  // |T| - 2 - d1: equals d2 unless c i^2 w lands on 2w (c = 2, i = 1)
  std::int64_t d2_effective = 0;
  std::int64_t D1 = 0, D2 = 0;  // degrees of the dual program it certifies
  std::map<std::int64_t, Rational> ratios;  // Phi(l)/|Phi(w)|, l in T; sign fixed so Phi(w) > 0
  Rational norm_weight;                     // sum |ratio(l)| l^D1 = C/|Phi(w)|

  Rational ratio(std::int64_t l) const;  // 0 off the support
};

/// Exact ratios via |Phi(r)| = N! / prod_{j in T, j != r} |r - j| and
/// sgn Phi(l) = (-1)^l (-1)^{#{i not in T : l < i <= N}}.
DualWitness build_witness(const WitnessParams& params);

/// Phi(l)/|Phi(w)| from the defining product (-1)^l C(N,l) Q_T(l),
/// evaluated directly over all excluded integers. Test oracle; small N only.
Rational direct_ratio(const WitnessParams& params, const SupportSet& support, std::int64_t l);

/// sum_l ratio(l) l^j for j = 0..j_max (all zero when j_max <= |T| - 2).
std::vector<Rational> orthogonality_check(const DualWitness& wit, std::int64_t j_max);

/// (A + B - E) / (A + B + E).
Rational dual_objective(const DualWitness& wit);

struct RatioCheck {
  std::string which;  // "keyeq1" (points of T2) or "keyeq2" (points of T1)
  std::int64_t i = 0;
  std::int64_t point = 0;
  Rational lhs, rhs;
  bool holds = false;
  bool skipped = false;  // bound undefined (c i^2 <= 2, the point is 2w)
};

/// keyeq1: |Phi(c w i^2)|/|Phi(w)| <= slack * 2 / ((1 - 1/(c i^2)) (c i^2 - 2) (c i^2)^d1)
/// keyeq2: |Phi(floor(w/(c i^2)))|/|Phi(w)| <= 4 (c i^2)^(d1 - 1)
std::vector<RatioCheck> ratio_bound_check(const DualWitness& wit, const Rational& slack = 2);

struct ProductCheck {
  Rational lhs, rhs;
  bool holds = false;
};

/// (w/(c i^2))^(d1-1) prod_{j != i} (|j-i||j+i| - c i^2 j^2 / w) / j^2
/// against (w/(c i^2))^(d1-1) / 2; requires 1 <= i <= d1.
ProductCheck appendix_product_check(std::int64_t w, std::int64_t c, std::int64_t i);

/// sum_{l=0..N} C(N,l) (-1)^l Q(l); zero whenever deg Q <= N - 1.
Rational key_identity_sum(const Poly& Q, std::int64_t N);

/// phi = Phi / C on the given points (0 off the support).
std::vector<Rational> normalized_phi(const DualWitness& wit, const std::vector<std::int64_t>& points);

/// Double-precision mirror: log|Phi(l)/Phi(w)| with signs, and the
/// objective, computed without exact arithmetic (usable for N up to 1e6).
struct FloatWitness {
  std::vector<std::int64_t> points;
  std::vector<int> signs;
  std::vector<double> log_ratio;
  double objective = 0.0;
};
FloatWitness build_witness_float(const WitnessParams& params);

}  // namespace apxcount
