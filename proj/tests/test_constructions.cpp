#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apxcount/constructions/constructions.hpp"
#include "apxcount/lpsolver/builders.hpp"
#include "apxcount/numkernel/explosion.hpp"

#include <cmath>

using namespace apxcount;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// cosh/cos form of T_d
double cheb_oracle(int d, double x) {
  if (std::abs(x) <= 1) return std::cos(d * std::acos(x));
  double s = (x > 0 || d % 2 == 0) ? 1.0 : -1.0;
  return s * std::cosh(d * std::acosh(std::abs(x)));
}

}  // namespace

TEST_CASE("fedja pieces") {
  auto fp = fedja_construct(27);
  CHECK(fp.d == 3);
  CHECK(fp.perfect_cube);
  for (long k = 1; k <= 3; ++k) CHECK(fp.u(q(1, k)) == 0);
  // u equals the product oracle at 200 points of [0, 1/3]
  for (int s = 0; s < 200; ++s) {
    double x = s / 600.0;
    double prod = (1 - x) * (1 - 2 * x) * (1 - 3 * x);
    CHECK(std::abs(fp.u.eval(x) - prod) < 1e-12);
    CHECK(prod >= 0);
    CHECK(prod <= 1);
  }
  auto r = fedja_verify(fp, 54);
  CHECK(r.u_min.lo >= -q(1, 100));
  CHECK(r.u_max.hi <= 1 + q(1, 100));
  CHECK(r.u_max.lo == 1);  // u(0)

  // v = (1 + T_3(A(x))) / 2 with A(1/27) = 1, A(1/3) = -1
  for (double x : {0.0, 1.0 / 54, 1.0 / 27, 0.1, 0.2, 1.0 / 3}) {
    double a = 1 - 2 * (x - 1.0 / 27) / (1.0 / 3 - 1.0 / 27);
    CHECK(std::abs(fp.v.eval(x) - (1 + cheb_oracle(3, a)) / 2) < 1e-9);
  }
  CHECK(fp.jump >= 2);
  CHECK_THROWS_AS(fedja_construct(7), std::invalid_argument);
}

TEST_CASE("fedja properties") {
  for (std::int64_t w : {8, 27, 64, 125}) {
    CAPTURE(w);
    auto fp = fedja_construct(w);
    auto r = fedja_verify(fp, 4 * w);
    CHECK(r.degree <= static_cast<std::size_t>(8 * fp.d));
    CHECK(r.degree_ok);
    CHECK(r.no_ok);
    CHECK(r.mid_ok);
    CHECK(r.yes_points_ok);
    CHECK(r.yes_certified);
    CHECK(r.ok());
    CHECK(r.constant_term >= q(2, 3));
    CHECK(r.constant_term <= 1);
    CHECK(fp.assembled(q(1, w)) <= q(1, 3));
    CHECK(fp.assembled(q(1, 2 * w)) >= q(2, 3));
    // double oracle for the composition
    for (long k : {1L, 2L, static_cast<long>(w), static_cast<long>(2 * w), static_cast<long>(3 * w)}) {
      double y = fp.u.eval(1.0 / k) * fp.v.eval(1.0 / k) / to_double(fp.scale);
      CHECK(std::abs(fp.amplifier.eval(y) - to_double(fp.assembled(q(1, k)))) < 1e-9);
    }
  }
  CHECK_THROWS_AS(fedja_verify(fedja_construct(8), 15), std::invalid_argument);
}

TEST_CASE("fedja off the cubes") {
  for (std::int64_t w : {10, 50, 100}) {
    auto fp = fedja_construct(w);
    CHECK_FALSE(fp.perfect_cube);
    CHECK(fedja_verify(fp, 3 * w).ok());
  }
}

TEST_CASE("fedja feeds the explosion audit") {
  auto fp = fedja_construct(8);
  const auto& c = fp.assembled.coeffs();
  std::vector<Rational> rev(c.rbegin(), c.rend());
  LaurentPoly lq(-static_cast<std::int64_t>(c.size()) + 1, rev);
  auto rep = explosion_audit(lq, 40, 8);
  CHECK(rep.G_v.lo >= q(1, 6));
  CHECK(rep.case_v);
}

TEST_CASE("chebyshev counting polynomial") {
  auto P = chebyshev_counting_poly(16, 1);
  CHECK(P.degree_or_zero() == 4);
  Rational x = q(17, 16);
  CHECK(P(q(1)) == 8 * pow(x, 4) - 8 * x * x + 1);
  CHECK(P(q(1)) >= 2);
  CHECK(abs(P(q(16))) <= 1);
  CHECK(P(q(16)) == 8 * pow(q(1, 8), 4) - 8 * q(1, 64) + 1);

  auto P4 = chebyshev_counting_poly(64, 4);
  CHECK(P4(q(8)) == 1);
  for (double l : {1.0, 5.0, 30.0, 64.0}) CHECK(std::abs(P4.eval(l) - cheb_oracle(4, 1 + 8.0 / 64 - l / 64)) < 1e-9);

  CHECK_THROWS_AS(chebyshev_counting_poly(10, 6), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_counting_poly(10, 0), std::invalid_argument);
}

TEST_CASE("chebyshev counting checks") {
  for (auto [N, w] : std::vector<std::pair<std::int64_t, std::int64_t>>{{16, 1}, {64, 1}, {64, 4}, {100, 4}, {256, 16}, {512, 8}}) {
    CAPTURE(N);
    CAPTURE(w);
    auto P = chebyshev_counting_poly(N, w);
    auto r = chebyshev_counting_check(P, N, w);
    CHECK(r.bounded_ok);
    CHECK(r.at_w_ok);
    CHECK(r.epsilon < 1);

    // the rescaled polynomial is a feasible point of the primal at D1 = 0
    const auto D2 = static_cast<std::int64_t>(r.degree);
    auto lp = build_laurent_primal(N, w, 0, D2);
    std::vector<Rational> x = r.rescaled.coeffs();
    x.resize(static_cast<std::size_t>(D2) + 1);
    x.push_back(r.epsilon);
    CHECK(check_feasible(lp, x) == "");
    if (N <= 100) CHECK(optimal_value(lp) <= r.epsilon);

    auto literal = chebyshev_counting_check(chebyshev_counting_poly(N, w, true), N, w);
    if (w == 1) CHECK(literal.max_abs_tail == r.max_abs_tail);
    if (w > 2) {
      CHECK_FALSE(literal.bounded_ok);
      CHECK(literal.unbounded_points.front() == 2 * w);
    }
  }
}
