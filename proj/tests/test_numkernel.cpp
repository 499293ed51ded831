#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apxcount/numkernel/bounds.hpp"
#include "apxcount/numkernel/explosion.hpp"
#include "apxcount/numkernel/transforms.hpp"

#include <cmath>
#include <random>

using namespace apxcount;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.push_back(q(x));
  return Poly(v);
}

Poly random_poly(std::mt19937_64& rng, std::size_t deg) {
  std::uniform_int_distribution<long> coef(-20, 20);
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= deg; ++i) c.push_back(q(coef(rng), 7));
  return Poly(c);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK(to_string(q(3)) == "3/1");
  CHECK(to_string(q(0)) == "0/1");
  CHECK(to_string(q(2, -4)) == "-1/2");
  CHECK(parse_rational("-10/4") == q(-5, 2));
  CHECK(parse_rational("7") == q(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(integer_root(27, 3) == 3);
  CHECK(integer_root(26, 3) == 2);
  CHECK(sqrt_approx(q(9, 4)) == q(3, 2));
  Rational s = sqrt_approx(q(2));
  CHECK(s * s <= 2);
  CHECK(to_double(s) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("poly degree sentinel and arithmetic") {
  Poly zero;
  CHECK_FALSE(zero.degree().has_value());
  CHECK((P({1, 2}) - P({1, 2})).is_zero());
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  CHECK(P({0, 0, 1}).derivative() == P({0, 2}));
  CHECK(pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
}

TEST_CASE("chebyshev") {
  CHECK(chebyshev(0) == P({1}));
  CHECK(chebyshev(2) == P({-1, 0, 2}));
  CHECK(chebyshev(5)(q(1)) == 1);
  // oracle: T_d(cos t) = cos(d t)
  for (std::size_t d = 0; d <= 12; ++d)
    for (double t : {0.1, 0.7, 1.3, 2.9}) CHECK(chebyshev(d).eval(std::cos(t)) == doctest::Approx(std::cos(d * t)));
  // d+1 alternating extrema at cos(j pi / d)
  for (std::size_t d = 1; d <= 10; ++d) {
    Poly T = chebyshev(d);
    for (std::size_t j = 0; j <= d; ++j) {
      double x = std::cos(M_PI * static_cast<double>(j) / static_cast<double>(d));
      double expect = (j % 2 == 0) ? 1.0 : -1.0;
      CHECK(T.eval(x) == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("compose_affine") {
  CHECK(compose_affine(P({0, 0, 1}), q(1), q(0)) == P({0, 0, 1}));
  CHECK(compose_affine(P({0, 1}), q(2), q(-1)) == P({-1, 2}));
  CHECK(compose_affine(chebyshev(2), q(0), q(1)) == P({1}));
  Poly p = P({3, -1, 4, 1});
  Poly c = compose_affine(p, q(2, 3), q(-5, 7));
  CHECK(c.degree() == p.degree());
  for (long x = -3; x <= 3; ++x) CHECK(c(q(x)) == p(q(2, 3) * x + q(-5, 7)));
}

TEST_CASE("interpolate and falling factorial") {
  std::vector<Rational> xs{q(0), q(1), q(2), q(5)}, ys{q(1), q(-2), q(7, 3), q(4)};
  Poly p = interpolate(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(p(xs[i]) == ys[i]);
  CHECK(falling_factorial(3) == P({0, 2, -3, 1}));
  CHECK_THROWS_AS(interpolate(std::vector<Rational>{q(1), q(1)}, std::vector<Rational>{q(0), q(0)}),
                  std::invalid_argument);
}

TEST_CASE("laurent poly") {
  LaurentPoly l(-2, {q(-2), q(0), q(3), q(1)});  // -2k^-2 + 3 + k
  CHECK(l.negative_degree() == 2);
  CHECK(l.positive_degree() == 1);
  CHECK(l(q(2)) == q(-1, 2) + 3 + 2);
  CHECK_THROWS_AS(l(q(0)), std::domain_error);
  LaurentPoly trimmed(-3, {q(0), q(1), q(0)});
  CHECK(trimmed.min_exp() == -2);
  CHECK(trimmed.coeffs().size() == 1);
}

TEST_CASE("laurent_split") {
  auto [u, v] = laurent_split(LaurentPoly(-2, {q(-2), q(0), q(3), q(1)}));
  CHECK(u == P({3, 1}));
  CHECK(v == P({0, 0, -2}));
  auto [u2, v2] = laurent_split(LaurentPoly::monomial(q(1), -1));
  CHECK(u2.is_zero());
  CHECK(v2 == P({0, 1}));
  auto [u3, v3] = laurent_split(LaurentPoly::monomial(q(5), 0));
  CHECK(u3 == P({5}));
  CHECK(v3.is_zero());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> e(-6, 0), c(-9, 9);
    std::vector<Rational> coeffs;
    for (int i = 0; i < 10; ++i) coeffs.push_back(q(c(rng), 3));
    LaurentPoly lp(e(rng), coeffs);
    auto [uu, vv] = laurent_split(lp);
    for (long k : {-3L, -1L, 1L, 2L, 7L}) CHECK(uu(q(k)) + vv(q(1, k)) == lp(q(k)));
    CHECK(laurent_join(uu, vv) == lp);
  }
}

TEST_CASE("symmetric laurent to ordinary") {
  CHECK(symmetric_laurent_to_ordinary(LaurentPoly(-1, {q(1), q(0), q(1)})) == P({0, 1}));
  CHECK(symmetric_laurent_to_ordinary(LaurentPoly(-2, {q(1), q(0), q(0), q(0), q(1)})) == P({-2, 0, 1}));
  CHECK(symmetric_laurent_to_ordinary(LaurentPoly::monomial(q(7), 0)) == P({7}));
  try {
    symmetric_laurent_to_ordinary(LaurentPoly(-1, {q(1), q(0), q(2)}));
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x^1") != std::string::npos);
  }
  // round trip on random symmetric input
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    Poly base = random_poly(rng, 6);
    LaurentPoly l = substitute_x_plus_inv(base);
    Poly back = symmetric_laurent_to_ordinary(l);
    CHECK(back == base);
    CHECK(substitute_x_plus_inv(back) == l);
    CHECK(static_cast<std::int64_t>(back.degree_or_zero()) == l.positive_degree());
  }
}

TEST_CASE("hyperbola restriction and swap symmetrization") {
  BivarPoly xy = BivarPoly::x() * BivarPoly::y();
  CHECK(hyperbola_restrict(xy, q(1)) == LaurentPoly::monomial(q(1), 0));
  CHECK(hyperbola_restrict(BivarPoly::x() + BivarPoly::y(), q(2)) == LaurentPoly(-1, {q(2), q(0), q(2)}));
  CHECK(hyperbola_restrict(BivarPoly::x() * BivarPoly::x(), q(1)) == LaurentPoly::monomial(q(1), 2));
  CHECK_THROWS_AS(hyperbola_restrict(xy, q(0)), std::invalid_argument);

  CHECK(symmetrize_swap(BivarPoly::x()) == (BivarPoly::x() + BivarPoly::y()) * q(1, 2));
  CHECK(symmetrize_swap(xy) == xy);
  CHECK(symmetrize_swap(BivarPoly::x() * BivarPoly::x() - BivarPoly::y() * BivarPoly::y()).is_zero());

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    BivarPoly p;
    for (std::size_t i = 0; i <= 4; ++i)
      for (std::size_t j = 0; i + j <= 4; ++j) p += BivarPoly::monomial(q(c(rng), 2), i, j);
    Rational a = q(c(rng) == 0 ? 3 : c(rng) + 11, 4);
    LaurentPoly l = hyperbola_restrict(symmetrize_swap(p), a);
    for (std::int64_t e = 0; e <= 4; ++e) CHECK(l.coeff(e) == l.coeff(-e));
    CHECK(l.positive_degree() <= 4);
    CHECK(l.negative_degree() <= 4);
    // oracle: direct evaluation on the curve
    Rational t = q(5, 3);
    CHECK(l(t) == symmetrize_swap(p)(a * t, a / t));
  }
}

TEST_CASE("interval extremum") {
  auto b = interval_extremum(P({0, 0, 1}), q(0), q(1), 10);
  CHECK(b.lo == 1);
  CHECK(b.contains(q(1)));
  auto t4 = interval_extremum(chebyshev(4), q(-1), q(1), 64);
  CHECK(t4.contains(q(1)));
  auto lin = interval_extremum(P({-1, 2}), q(0), q(1), 2);
  CHECK(lin.lo == 1);
  CHECK(lin.hi == 1);

  // oracle: dense double sampling never escapes the certified enclosure
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, 1 + trial % 9);
    auto hi = interval_extremum(p, q(-1), q(2));
    auto lo = interval_minimum(p, q(-1), q(2));
    double mx = -1e300, mn = 1e300;
    for (int i = 0; i <= 20000; ++i) {
      double x = -1.0 + 3.0 * i / 20000.0;
      mx = std::max(mx, p.eval(x));
      mn = std::min(mn, p.eval(x));
    }
    CHECK(mx <= to_double(hi.hi) + 1e-9);
    CHECK(mx >= to_double(hi.lo) - 1e-9);
    CHECK(mn >= to_double(lo.lo) - 1e-9);
    auto osc = interval_oscillation(p, q(-1), q(2));
    CHECK(mx - mn <= to_double(osc.hi) + 1e-9);
  }
}

TEST_CASE("markov bound") {
  CHECK(markov_bound(chebyshev(3), q(-1), q(1)) == 9);
  CHECK(abs(chebyshev(3).derivative()(q(1))) == 9);
  CHECK(markov_bound(P({4}), q(0), q(1)) == 0);
  CHECK(markov_bound(P({0, 1}), q(0), q(2)) == 1);
  CHECK_THROWS_AS(markov_bound(P({0, 1}), q(1), q(1)), std::invalid_argument);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = random_poly(rng, 1 + trial % 8);
    Poly dp = p.derivative();
    double bound = to_double(markov_bound(p, q(-2), q(3)));
    double worst = 0.0;
    for (int i = 0; i <= 5000; ++i) worst = std::max(worst, std::abs(dp.eval(-2.0 + 5.0 * i / 5000.0)));
    CHECK(worst <= bound * (1 + 1e-12));
  }
}

TEST_CASE("paturi bound") {
  CHECK(paturi_bound(0, q(3)) == 1);
  CHECK(paturi_bound(3, q(0)) == 1);
  CHECK(abs(chebyshev(3)(q(1))) == 1);
  Rational t4 = chebyshev(4)(q(9, 8));
  CHECK(to_high_precision(t4) <= paturi_bound(4, q(1, 8)));
  // Chebyshev is the extremal case: its growth is within the bound
  for (std::size_t d = 1; d <= 10; ++d)
    for (long m : {1L, 2L, 4L}) {
      Rational mu = q(1, 4 * m);
      CHECK(to_high_precision(abs(chebyshev(d)(1 + mu))) <= paturi_bound(d, mu));
    }
}

TEST_CASE("explosion audit") {
  auto constant = explosion_audit(LaurentPoly::monomial(q(1, 2), 0), 100, 9);
  CHECK(constant.G_u.hi == 0);
  CHECK(constant.G_v.hi == 0);
  CHECK(constant.L_u.hi == 0);
  CHECK(constant.L_v.hi == 0);
  CHECK(constant.Delta_u.hi == 0);

  // q = k/N with w a perfect square
  auto linear = explosion_audit(LaurentPoly::monomial(q(1, 100), 1), 100, 9);
  CHECK(linear.G_u.lo == q(2 * 9 - 3, 100));
  CHECK(linear.G_u.hi == q(2 * 9 - 3, 100));
  CHECK(linear.Delta_u.lo == q(1, 100));
  CHECK(linear.L_v.hi == 0);
  CHECK(linear.u_chain.size() == 5);
  CHECK(linear.v_chain.size() == 5);
  CHECK_FALSE(linear.promise_violations.empty());  // q(2w) = 18/100 < 2/3
  CHECK_THROWS_AS(explosion_audit(LaurentPoly(), 36, 9), std::invalid_argument);
}
