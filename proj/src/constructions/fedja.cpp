#include "apxcount/constructions/constructions.hpp"

#include "apxcount/lpsolver/lp.hpp"

#include <stdexcept>

namespace apxcount {
namespace {

const Rational one_third(1, 3), two_thirds(2, 3);

// Snaps to the 2^-20 grid, rounding away from the protected side.
Rational dyadic_floor(const Rational& x) {
  BigInt scaled = x.get_num() * (BigInt(1) << 20);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  return make_rational(scaled, BigInt(1) << 20);
}
Rational dyadic_ceil(const Rational& x) {
  BigInt scaled = x.get_num() * (BigInt(1) << 20);
  mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  return make_rational(scaled, BigInt(1) << 20);
}

// Quartic g maximizing the margin t with t <= g <= 1 - t on [0, 1],
// g <= 1/3 - t on [0, y_no] and g >= 2/3 + t on [y_yes, y_top]; the margin
// absorbs what happens between the samples.
std::pair<Poly, Rational> fit_amplifier(const Rational& y_no, const Rational& y_yes, const Rational& y_top) {
  constexpr int degree = 4, samples = 128;
  LinearProgram lp;
  lp.maximize = true;
  for (int j = 0; j <= degree; ++j) lp.add_variable("g" + std::to_string(j), VarBound::free);
  const std::size_t t = lp.add_variable("t", VarBound::nonnegative, 1);
  auto row_at = [&](const Rational& y, const Rational& t_coef) {
    std::vector<Rational> row(lp.num_vars());
    Rational p = 1;
    for (int j = 0; j <= degree; ++j, p *= y) row[static_cast<std::size_t>(j)] = p;
    row[t] = t_coef;
    return row;
  };
  auto grid = [&](const Rational& a, const Rational& b, auto&& add) {
    for (int s = 0; s <= samples; ++s) add(a + (b - a) * s / samples);
  };
  grid(Rational(0), std::max(Rational(1), y_top), [&](const Rational& y) {
    lp.add_row(row_at(y, -1), Sense::ge, 0);
    lp.add_row(row_at(y, 1), Sense::le, 1);
  });
  grid(Rational(0), y_no, [&](const Rational& y) { lp.add_row(row_at(y, 1), Sense::le, one_third); });
  grid(y_yes, y_top, [&](const Rational& y) {
    lp.add_row(row_at(y, -1), Sense::ge, two_thirds);
  });
  std::vector<Rational> cap(lp.num_vars());
  cap[t] = 1;
  lp.add_row(cap, Sense::le, Rational(1, 6));
  LPSolution sol = simplex_solve(lp);
  if (sol.status != LPStatus::optimal) throw std::runtime_error("amplifier fit did not solve");
  std::vector<Rational> g(sol.primal.begin(), sol.primal.begin() + degree + 1);
  return {Poly(g), sol.primal[t]};
}

}  // namespace

FedjaPoly fedja_construct(std::int64_t w) {
  if (w < 8) throw std::invalid_argument("fedja construction requires w >= 8");
  FedjaPoly fp;
  fp.w = w;
  fp.d = integer_root(w, 3);
  fp.perfect_cube = fp.d * fp.d * fp.d == w;
  if (!fp.perfect_cube) ++fp.d;

  fp.u = Poly({Rational(1)});
  for (std::int64_t m = 1; m <= fp.d; ++m) fp.u = fp.u * Poly({Rational(1), Rational(-m)});

  // A(x) = 1 - 2 (x - 1/w) / (1/d - 1/w)
  const Rational inv_w(1, w), inv_d = Rational(1) / fp.d;
  const Rational slope = Rational(-2) / (inv_d - inv_w);
  const Poly A({Rational(1 - slope * inv_w), slope});
  const Poly T = chebyshev(static_cast<std::size_t>(fp.d));
  fp.v = (compose(T, A) + Poly({Rational(1)})) * Rational(1, 2);
  fp.jump = T(A(Rational(1, 2 * w)));

  const Poly p = fp.u * fp.v;
  fp.scale = p(Rational(0));
  Rational y_no = 0;
  for (std::int64_t k = 1; k <= w; ++k) y_no = std::max(y_no, Rational(p(Rational(1, k)) / fp.scale));
  const Rational half_gap(1, 2 * w);
  const std::size_t grid = 16 * p.degree_or_zero() * p.degree_or_zero();
  const Rational y_yes = dyadic_floor(interval_minimum(p, 0, half_gap, grid).lo / fp.scale);
  const Rational y_top = dyadic_ceil(interval_extremum(p, 0, half_gap, grid).hi / fp.scale);
  if (!(dyadic_ceil(y_no) < y_yes)) throw std::runtime_error("no separation between the two regions");
  auto [g, margin] = fit_amplifier(dyadic_ceil(y_no), y_yes, y_top);
  fp.amplifier = g;
  fp.amplifier_margin = margin;
  fp.assembled = compose(g, p * Rational(1 / fp.scale));
  return fp;
}

FedjaReport fedja_verify(const FedjaPoly& fp, std::int64_t k_max, std::size_t grid) {
  const std::int64_t w = fp.w;
  if (k_max < 2 * w) throw std::invalid_argument("k_max must be >= 2w");
  FedjaReport r;
  r.w = w;
  r.k_max = k_max;
  r.degree = fp.assembled.degree_or_zero();
  r.degree_ok = static_cast<std::int64_t>(r.degree) <= 8 * fp.d;

  r.u_zeros_ok = true;
  for (std::int64_t k = 1; k <= fp.d; ++k) r.u_zeros_ok = r.u_zeros_ok && fp.u(Rational(1, k)) == 0;
  const std::size_t u_grid = 256 * static_cast<std::size_t>(fp.d * fp.d);
  r.u_min = interval_minimum(fp.u, 0, Rational(1) / fp.d, u_grid);
  r.u_max = interval_extremum(fp.u, 0, Rational(1) / fp.d, u_grid);

  r.no_ok = r.mid_ok = r.yes_points_ok = true;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    Rational val = fp.assembled(Rational(1, k));
    const char* region = k <= w ? "no" : (k < 2 * w ? "mid" : "yes");
    bool ok = k <= w ? (val >= 0 && val <= one_third)
                     : (k < 2 * w ? (val >= 0 && val <= 1) : (val >= two_thirds && val <= 1));
    if (ok) continue;
    (k <= w ? r.no_ok : (k < 2 * w ? r.mid_ok : r.yes_points_ok)) = false;
    r.violations.push_back({region, k, val});
  }

  if (grid == 0) grid = 16 * r.degree * r.degree;
  const Rational half_gap(1, 2 * w);
  r.yes_min = interval_minimum(fp.assembled, 0, half_gap, grid);
  r.yes_max = interval_extremum(fp.assembled, 0, half_gap, grid);
  r.yes_certified = r.yes_min.lo >= two_thirds && r.yes_max.hi <= 1;
  r.constant_term = fp.assembled.coeff(0);
  return r;
}

}  // namespace apxcount
