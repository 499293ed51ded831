#include "apxcount/constructions/constructions.hpp"

#include "apxcount/lpsolver/lp.hpp"

#include <stdexcept>

namespace apxcount {

Poly chebyshev_counting_poly(std::int64_t N, std::int64_t w, bool paper_variant) {
  if (w < 1 || 2 * w > N) throw std::invalid_argument("need 1 <= w and 2w <= N");
  std::int64_t m = integer_root(N / w, 2);
  while (m * m * w < N) ++m;  // ceil(sqrt(N/w))
  const Rational step = paper_variant ? Rational(1, w * N) : Rational(1, N);
  const Poly arg({Rational(1 + make_rational(2 * w, N)), Rational(-step)});
  return compose(chebyshev(static_cast<std::size_t>(m)), arg);
}

ChebCountReport chebyshev_counting_check(const Poly& P, std::int64_t N, std::int64_t w) {
  if (w < 1 || 2 * w > N) throw std::invalid_argument("need 1 <= w and 2w <= N");
  ChebCountReport r;
  r.N = N;
  r.w = w;
  r.degree = P.degree_or_zero();
  std::vector<Rational> values(static_cast<std::size_t>(N) + 1);
  for (std::int64_t l = 1; l <= N; ++l) values[static_cast<std::size_t>(l)] = P(Rational(l));
  r.at_w = values[static_cast<std::size_t>(w)];
  r.at_w_ok = r.at_w >= 2;
  for (std::int64_t l = 2 * w; l <= N; ++l) {
    Rational a = abs(values[static_cast<std::size_t>(l)]);
    if (a > r.max_abs_tail) r.max_abs_tail = a;
    if (a > 1) r.unbounded_points.push_back(l);
  }
  r.bounded_ok = r.unbounded_points.empty();

  // minimize eps over (alpha, beta)
  LinearProgram lp;
  const std::size_t alpha = lp.add_variable("alpha", VarBound::free);
  const std::size_t beta = lp.add_variable("beta", VarBound::free);
  const std::size_t eps = lp.add_variable("eps", VarBound::nonnegative, 1);
  auto add_abs = [&](const Rational& value, const Rational& center, const Rational& width) {
    std::vector<Rational> row(3);
    row[alpha] = value;
    row[beta] = 1;
    row[eps] = -1;
    lp.add_row(row, Sense::le, center + width);
    row[eps] = 1;
    lp.add_row(row, Sense::ge, center - width);
  };
  add_abs(values[static_cast<std::size_t>(w)], 1, 0);
  add_abs(values[static_cast<std::size_t>(2 * w)], -1, 0);
  for (std::int64_t l = 1; l <= N; ++l) add_abs(values[static_cast<std::size_t>(l)], 0, 1);
  LPSolution sol = simplex_solve(lp);
  if (sol.status != LPStatus::optimal) throw std::runtime_error("rescale program did not solve");
  r.alpha = sol.primal[alpha];
  r.beta = sol.primal[beta];
  r.epsilon = sol.value;
  r.rescaled = P * r.alpha + Poly({r.beta});
  return r;
}

}  // namespace apxcount
