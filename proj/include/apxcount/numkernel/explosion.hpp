#pragma once

#include "apxcount/numkernel/bounds.hpp"
#include "apxcount/numkernel/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace apxcount {

enum class Verdict { holds, fails, inconclusive, not_applicable };
std::string to_string(Verdict v);

/// One link "lhs >= f(rhs)" of a chain, judged on certified enclosures.
struct ChainLink {
  std::string relation;
  Verdict verdict = Verdict::not_applicable;
  Rational lhs_lo, lhs_hi;  // enclosure of the left side
  Rational rhs_lo, rhs_hi;  // enclosure of f(right side)
};

/// Whether the shrinking-domain corollary of Paturi's lemma applies.
struct PaturiCheck {
  Rational epsilon;
  bool raw_hypothesis = false;  // epsilon <= 1 / (100 d^2)
  HighPrecision growth;         // exp(2d sqrt(2mu + mu^2)), mu = 1/(1-epsilon) - 1
  bool growth_at_most_two = false;
};

struct ExplosionReport {
  std::int64_t N = 0, w = 0;
  Rational sqrt_w;  // rational approximation used for the sqrt(w) endpoints
  Poly u, v;
  std::size_t deg_u = 0, deg_v = 0;
  IntervalBound G_u, Delta_u, H_u, I_u, L_u;
  IntervalBound G_v, Delta_v, H_v, I_v, L_v;
  bool case_u = false;  // u(2w) - u(w) >= 1/6
  bool case_v = false;  // v(1/(2w)) - v(1/w) >= 1/6
  std::vector<std::string> promise_violations;
  std::vector<ChainLink> u_chain, v_chain;
  // "stated" uses the epsilon written in the argument (sqrt(w)/N for u,
  // 1/(2 sqrt w) for v); "actual" uses the true fraction of the domain that
  // is cut away.
  PaturiCheck paturi_u_stated, paturi_u_actual, paturi_v_stated, paturi_v_actual;
  bool discrete_hypothesis_u = false;  // deg(u)^2 <= N - w
  bool discrete_hypothesis_v = false;  // deg(v)^4 <= w
};

/// Diagnostic audit of the u/v explosion argument for a purported counting
/// polynomial q. Promise violations are reported, not thrown. Requires
/// 0 < w and 4w < N.
ExplosionReport explosion_audit(const LaurentPoly& q, std::int64_t N, std::int64_t w);

}  // namespace apxcount
