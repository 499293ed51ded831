#include "apxcount/numkernel/explosion.hpp"

#include "apxcount/numkernel/transforms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace apxcount {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

namespace {

IntervalBound exact(const Rational& x) { return {x, x, true}; }

IntervalBound discrete_oscillation(const std::vector<Rational>& values) {
  if (values.empty()) return exact(Rational(0));
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return exact(*hi - *lo);
}

// lhs >= f(rhs) for nondecreasing f
ChainLink link(std::string relation, const IntervalBound& lhs, const IntervalBound& rhs,
               const std::function<Rational(const Rational&)>& f) {
  ChainLink out;
  out.relation = std::move(relation);
  out.lhs_lo = lhs.lo;
  out.lhs_hi = lhs.hi;
  out.rhs_lo = f(rhs.lo);
  out.rhs_hi = f(rhs.hi);
  if (out.lhs_lo >= out.rhs_hi)
    out.verdict = Verdict::holds;
  else if (out.lhs_hi < out.rhs_lo)
    out.verdict = Verdict::fails;
  else
    out.verdict = Verdict::inconclusive;
  return out;
}

ChainLink not_applicable(std::string relation) {
  ChainLink out;
  out.relation = std::move(relation);
  return out;
}

PaturiCheck paturi_check(std::size_t d, const Rational& epsilon) {
  PaturiCheck out;
  out.epsilon = epsilon;
  out.raw_hypothesis = d == 0 || epsilon * static_cast<unsigned long>(100 * d * d) <= 1;
  Rational mu = 1 / (1 - epsilon) - 1;
  out.growth = paturi_bound(d, mu);
  out.growth_at_most_two = out.growth <= 2;
  return out;
}

}  // namespace

ExplosionReport explosion_audit(const LaurentPoly& q, std::int64_t N, std::int64_t w) {
  if (w <= 0) throw std::invalid_argument("explosion_audit requires w > 0");
  if (N <= 4 * w) throw std::invalid_argument("explosion_audit requires N > 4w");
  ExplosionReport r;
  r.N = N;
  r.w = w;
  auto [u, v] = laurent_split(q);
  r.u = u;
  r.v = v;
  r.deg_u = u.degree_or_zero();
  r.deg_v = v.degree_or_zero();

  const Rational Nq(N), wq(w), one(1);
  const Rational sw = sqrt_approx(wq);
  r.sqrt_w = sw;

  for (std::int64_t k = 1; k <= N; ++k) {
    Rational val = q(Rational(k));
    if (val < 0 || val > 1) r.promise_violations.push_back("q(" + std::to_string(k) + ") = " + to_string(val) + " outside [0,1]");
  }
  if (q(wq) > Rational(1, 3)) r.promise_violations.push_back("q(w) > 1/3");
  if (q(2 * wq) < Rational(2, 3)) r.promise_violations.push_back("q(2w) < 2/3");

  // u lives on k, v on x = 1/k
  r.G_u = interval_oscillation(u, sw, 2 * wq);
  r.Delta_u = interval_abs_max(u.derivative(), sw, 2 * wq);
  r.H_u = interval_oscillation(u, sw, Nq);
  r.I_u = interval_oscillation(u, wq, Nq);
  std::vector<Rational> vals;
  for (std::int64_t k = w; k <= N; ++k) vals.push_back(u(Rational(k)));
  r.L_u = discrete_oscillation(vals);

  r.G_v = interval_oscillation(v, one / Nq, one / wq);
  r.Delta_v = interval_abs_max(v.derivative(), one / Nq, one / wq);
  r.H_v = interval_oscillation(v, one / Nq, one / sw);
  r.I_v = interval_oscillation(v, one / (2 * wq), one / sw);
  vals.clear();
  std::int64_t root = integer_root(w, 2);
  if (root * root < w) ++root;
  for (std::int64_t k = root; k <= 2 * w; ++k) vals.push_back(v(Rational(1, static_cast<unsigned long>(k))));
  r.L_v = discrete_oscillation(vals);

  r.case_u = u(2 * wq) - u(wq) >= Rational(1, 6);
  r.case_v = v(one / (2 * wq)) - v(one / wq) >= Rational(1, 6);

  auto id_minus_one = [](const Rational& x) -> Rational { return x - 1; };
  auto half = [](const Rational& x) -> Rational { return x / 2; };

  r.u_chain.push_back(link("G_u >= L_v - 1", r.G_u, r.L_v, id_minus_one));
  r.u_chain.push_back(link("Delta_u >= G_u / (2w)", r.Delta_u, r.G_u, [&](const Rational& x) -> Rational { return x / (2 * wq); }));
  if (r.deg_u == 0)
    r.u_chain.push_back(not_applicable("H_u >= Delta_u (N - sqrt w) / deg(u)^2"));
  else
    r.u_chain.push_back(link("H_u >= Delta_u (N - sqrt w) / deg(u)^2", r.H_u, r.Delta_u, [&](const Rational& x) -> Rational {
      return x * (Nq - sw) / static_cast<unsigned long>(r.deg_u * r.deg_u);
    }));
  r.u_chain.push_back(link("I_u >= H_u / 2", r.I_u, r.H_u, half));
  r.u_chain.push_back(link("L_u >= I_u / 2", r.L_u, r.I_u, half));

  r.v_chain.push_back(link("G_v >= L_u - 1", r.G_v, r.L_u, id_minus_one));
  r.v_chain.push_back(link("Delta_v >= G_v w", r.Delta_v, r.G_v, [&](const Rational& x) -> Rational { return x * wq; }));
  if (r.deg_v == 0)
    r.v_chain.push_back(not_applicable("H_v >= Delta_v (1/sqrt w - 1/N) / deg(v)^2"));
  else
    r.v_chain.push_back(link("H_v >= Delta_v (1/sqrt w - 1/N) / deg(v)^2", r.H_v, r.Delta_v, [&](const Rational& x) -> Rational {
      return x * (one / sw - one / Nq) / static_cast<unsigned long>(r.deg_v * r.deg_v);
    }));
  r.v_chain.push_back(link("I_v >= H_v / 2", r.I_v, r.H_v, half));
  r.v_chain.push_back(link("L_v >= I_v / 2", r.L_v, r.I_v, half));

  // Domain shrink fractions used by the corollary: [sqrt w, N] -> [w, N] for u,
  // [1/N, 1/sqrt w] -> [1/(2w), 1/sqrt w] for v.
  r.paturi_u_stated = paturi_check(r.deg_u, sw / Nq);
  r.paturi_u_actual = paturi_check(r.deg_u, (wq - sw) / (Nq - sw));
  r.paturi_v_stated = paturi_check(r.deg_v, one / (2 * sw));
  r.paturi_v_actual = paturi_check(r.deg_v, (one / (2 * wq) - one / Nq) / (one / sw - one / Nq));
  r.discrete_hypothesis_u = static_cast<std::int64_t>(r.deg_u * r.deg_u) <= N - w;
  r.discrete_hypothesis_v = static_cast<std::int64_t>(r.deg_v * r.deg_v * r.deg_v * r.deg_v) <= w;
  return r;
}

}  // namespace apxcount
