#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apxcount/boolsym/multilinear.hpp"

#include <bit>
#include <random>

using namespace apxcount;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Multilinear extension of a truth table via Moebius inversion.
MultilinearPoly from_values(unsigned n, const std::vector<Rational>& values) {
  std::vector<Rational> c = values;
  for (unsigned i = 0; i < n; ++i)
    for (std::uint32_t m = 0; m < (1U << n); ++m)
      if (m & (1U << i)) c[m] -= c[m ^ (1U << i)];
  MultilinearPoly p(n);
  for (std::uint32_t m = 0; m < (1U << n); ++m)
    if (c[m] != 0) p.add_term(m, c[m]);
  return p;
}

MultilinearPoly random_poly(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<std::uint32_t> mask(0, (1U << n) - 1U);
  std::uniform_int_distribution<int> coef(-9, 9), count(1, 12);
  MultilinearPoly p(n);
  int terms = count(rng);
  for (int i = 0; i < terms; ++i) p.add_term(mask(rng), q(coef(rng), 1 + static_cast<long>(rng() % 5)));
  return p;
}

// E[f(X)] for X ~ Bin(N, s/N), exact.
Rational binomial_expectation(const BivarPoly& p, unsigned N, const Rational& s, const Rational& t) {
  Rational ps = s / N, pt = t / N, acc;
  for (unsigned x = 0; x <= N; ++x)
    for (unsigned y = 0; y <= N; ++y) {
      Rational wx = Rational(binomial(N, x)) * pow(ps, x) * pow(Rational(1 - ps), N - x);
      Rational wy = Rational(binomial(N, y)) * pow(pt, y) * pow(Rational(1 - pt), N - y);
      acc += wx * wy * p(Rational(x), Rational(y));
    }
  return acc;
}

}  // namespace

TEST_CASE("multilinear basics") {
  MultilinearPoly p(3);
  p.add_term(0b011, q(2)).add_term(0b110, q(1)).add_term(0b010, q(1));
  CHECK(p.degree() == 2);
  CHECK(p(0b111) == 4);
  CHECK(p(0b010) == 1);
  p.add_term(0b010, q(-1));
  CHECK(p.terms().size() == 2);
  CHECK_THROWS_AS(p.add_term(0b1000, q(1)), std::invalid_argument);
  CHECK_THROWS_AS(MultilinearPoly(25), std::invalid_argument);
}

TEST_CASE("mp_symmetrize examples") {
  MultilinearPoly x1(3);
  x1.add_term(1, q(1));
  CHECK(mp_symmetrize(x1) == Poly({q(0), q(1, 3)}));
  MultilinearPoly x1x2(2);
  x1x2.add_term(0b11, q(1));
  CHECK(mp_symmetrize(x1x2) == Poly({q(0), q(-1, 2), q(1, 2)}));
  MultilinearPoly one(4);
  one.add_term(0, q(1));
  CHECK(mp_symmetrize(one) == Poly::constant(q(1)));
}

TEST_CASE("mp_symmetrize equals brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned n = 1 + static_cast<unsigned>(trial % 12);
    MultilinearPoly p = random_poly(rng, n);
    Poly sym = mp_symmetrize(p);
    CHECK(sym.degree_or_zero() <= p.degree());
    for (unsigned k = 0; k <= n; ++k) CHECK(sym(Rational(k)) == brute_force_weight_average(p, k));
  }
}

TEST_CASE("symmetrized values are in lowest terms") {
  // binomial ratios sharing a factor once left 65/40 where 13/8 was due
  MultilinearPoly p(6);
  p.add_term(4, q(7, 2)).add_term(19, q(-5, 2));
  Rational v = mp_symmetrize(p)(Rational(3));
  CHECK(v == q(13, 8));
  CHECK(v.get_den() == 8);
}

TEST_CASE("brute force examples") {
  MultilinearPoly x1(3);
  x1.add_term(1, q(1));
  CHECK(brute_force_weight_average(x1, 2) == q(2, 3));
  MultilinearPoly x1x2(4);
  x1x2.add_term(0b11, q(1));
  CHECK(brute_force_weight_average(x1x2, 4) == 1);
  CHECK_THROWS_AS(brute_force_weight_average(x1x2, 5), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_weight_average(MultilinearPoly(21), 1), std::invalid_argument);
}

TEST_CASE("erase all subscripts") {
  MultilinearPoly p(3);
  p.add_term(0b011, q(2)).add_term(0b110, q(1)).add_term(0b010, q(1));
  CHECK(eas_symmetrize(p) == Poly({q(0), q(1), q(3)}));
  MultilinearPoly x1(1);
  x1.add_term(1, q(1));
  CHECK(eas_symmetrize(x1) == Poly::identity());
  MultilinearPoly cube(3);
  cube.add_term(0b111, q(1));
  CHECK(eas_symmetrize(cube)(q(1, 2)) == q(1, 8));
}

TEST_CASE("bounded Boolean functions stay bounded under erase-all-subscripts") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> val(0, 12);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 1 + static_cast<unsigned>(trial % 8);
    std::vector<Rational> values;
    for (std::uint32_t m = 0; m < (1U << n); ++m) values.push_back(q(val(rng), 12));
    MultilinearPoly p = from_values(n, values);
    for (std::uint32_t m = 0; m < (1U << n); ++m) REQUIRE(p(m) == values[m]);
    Poly e = eas_symmetrize(p);
    for (long k = 0; k <= 100; ++k) {
      Rational y = e(q(k, 100));
      CHECK(y >= 0);
      CHECK(y <= 1);
    }
  }
}

TEST_CASE("weight averaging is only bounded at integers") {
  // AND of two bits: bounded on the cube, but k(k-1)/2 < 0 at k = 1/2
  MultilinearPoly p(2);
  p.add_term(0b11, q(1));
  Poly s = mp_symmetrize(p);
  for (unsigned k = 0; k <= 2; ++k) CHECK(s(Rational(k)) >= 0);
  CHECK(s(q(1, 2)) == q(-1, 8));
}

TEST_CASE("two oracle symmetrization") {
  MultilinearPoly r1(4);
  r1.add_term(0b0001, q(1));
  auto [q1, p1] = two_oracle_symmetrize(r1, 2);
  CHECK(q1 == BivarPoly::x() * q(1, 2));
  CHECK(p1 == BivarPoly::x() * q(1, 2));

  MultilinearPoly r2(4);
  r2.add_term(0b0101, q(1));
  auto [q2, p2] = two_oracle_symmetrize(r2, 2);
  CHECK(q2 == BivarPoly::x() * BivarPoly::y() * q(1, 4));
  CHECK(p2 == BivarPoly::x() * BivarPoly::y() * q(1, 4));

  MultilinearPoly r3(4);
  r3.add_term(0b0011, q(1));
  auto [q3, p3] = two_oracle_symmetrize(r3, 2);
  CHECK(p3 == (BivarPoly::x() * BivarPoly::x() - BivarPoly::x()) * q(1, 2));
  CHECK(q3 == BivarPoly::x() * BivarPoly::x() * q(1, 4));
  CHECK(binomial_expectation(p3, 2, q(1, 3), q(0)) == q3(q(1, 3), q(0)));

  CHECK_THROWS_AS(two_oracle_symmetrize(r1, 3), std::invalid_argument);
}

TEST_CASE("two oracle coupling identity for all monomials up to degree 4") {
  // Both sides have degree <= N in s and in t, so agreement on an
  // (N+1) x (N+1) grid of distinct points is a polynomial identity.
  for (unsigned N = 1; N <= 6; ++N) {
    unsigned n = 2 * N;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) > 4) continue;
      MultilinearPoly r(n);
      r.add_term(mask, q(1));
      auto [qq, pp] = two_oracle_symmetrize(r, N);
      CHECK(qq.total_degree().value_or(0) <= r.degree());
      CHECK(pp.total_degree().value_or(0) <= r.degree());
      for (unsigned i = 0; i <= N; ++i)
        for (unsigned j = 0; j <= N; ++j) {
          Rational s = q(2 * i + 1, 3), t = q(3 * j + 1, 4);
          CHECK(binomial_expectation(pp, N, s, t) == qq(s, t));
        }
    }
  }
}
