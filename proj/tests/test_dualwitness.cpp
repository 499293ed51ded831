#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apxcount/dualwitness/witness.hpp"
#include "apxcount/lpsolver/builders.hpp"

#include <cmath>
#include <random>

using namespace apxcount;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("params and support sets") {
  auto p = make_params(8192, 64, 2);
  CHECK(p.d1 == 3);
  CHECK(p.d2 == 8);
  auto s = build_support(p);
  CHECK(s.t1 == std::vector<std::int64_t>{3, 8, 32});

  auto p2 = make_params(64, 2, 2);
  CHECK(p2.d2 == 4);
  CHECK(build_support(p2).t2 == std::vector<std::int64_t>{4, 16, 36, 64});

  auto p3 = make_params(512, 8, 3);
  CHECK(p3.d1 == 1);
  CHECK(build_support(p3).t1 == std::vector<std::int64_t>{2});

  auto p4 = make_params(16, 2, 3);
  CHECK(p4.d1 == 0);
  CHECK(p4.d2 == 1);
  CHECK(build_support(p4).full == std::vector<std::int64_t>{2, 4, 6});

  CHECK_THROWS_AS(make_params(8, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_params(100, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(100, 0, 3), std::invalid_argument);
}

TEST_CASE("magnitude identity agrees with the direct product") {
  for (auto [N, w, c] : std::vector<std::array<std::int64_t, 3>>{
           {16, 2, 3}, {8, 2, 5}, {64, 2, 2}, {60, 8, 3}, {100, 27, 3}, {40, 3, 2}}) {
    auto wit = build_witness(make_params(N, w, c));
    for (std::int64_t l = 0; l <= N; ++l) {
      CAPTURE(N);
      CAPTURE(l);
      CHECK(wit.ratio(l) == direct_ratio(wit.params, wit.support, l));
    }
    CHECK(wit.ratio(w) == 1);
    CHECK(wit.ratio(2 * w) < 0);
  }
}

TEST_CASE("two-point witness") {
  auto wit = build_witness(make_params(8, 2, 5));
  CHECK(wit.support.full == std::vector<std::int64_t>{2, 4});
  CHECK(wit.ratio(4) == -1);
  CHECK(all_zero(orthogonality_check(wit, 0)));
  CHECK(dual_objective(wit) == 1);
  CHECK(ratio_bound_check(wit).empty());
}

TEST_CASE("key identity on random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 40);
    std::vector<Rational> cs(static_cast<std::size_t>(N));
    for (auto& x : cs) x = q(coef(rng), 1 + std::abs(coef(rng)));
    CHECK(key_identity_sum(Poly(cs), N) == 0);
    // degree N is not annihilated: sum = (-1)^N N! * leading coefficient
    std::vector<Rational> top(static_cast<std::size_t>(N) + 1);
    top.back() = 1;
    Rational expected(factorial(static_cast<unsigned long>(N)));
    CHECK(key_identity_sum(Poly(top), N) == (N % 2 == 0 ? expected : Rational(-expected)));
  }
}

TEST_CASE("orthogonality sweep") {
  for (auto [N, w, c] : std::vector<std::array<std::int64_t, 3>>{
           {512, 8, 3}, {2048, 27, 3}, {8192, 64, 2}, {8192, 64, 4}, {256, 8, 3}, {250, 16, 2}}) {
    auto wit = build_witness(make_params(N, w, c));
    CAPTURE(N);
    CAPTURE(c);
    const std::int64_t k = wit.D1 + wit.D2;
    CHECK(k == static_cast<std::int64_t>(wit.support.full.size()) - 2);
    CHECK(all_zero(orthogonality_check(wit, k)));
    CHECK(orthogonality_check(wit, k + 1).back() != 0);
  }
  // c = 2 puts c*1^2*w on 2w: one fewer distinct point, one fewer moment
  auto wit = build_witness(make_params(8192, 64, 2));
  CHECK(wit.d2_effective == wit.params.d2 - 1);
}

TEST_CASE("dual objective") {
  auto w2 = build_witness(make_params(8192, 64, 2));
  auto w4 = build_witness(make_params(8192, 64, 4));
  Rational o2 = dual_objective(w2), o4 = dual_objective(w4);
  CHECK(o2 > 0);
  CHECK(o2 <= 1);
  CHECK(o4 > o2);
  // regression pin
  CHECK(o2 == parse_rational("2398015283969692293976977631829/6142229372103543700130661760000"));
  for (auto [N, w, c] : std::vector<std::array<std::int64_t, 3>>{{512, 8, 3}, {512, 27, 3}, {2048, 27, 3}}) {
    Rational o = dual_objective(build_witness(make_params(N, w, c)));
    CHECK(o > 0);
    CHECK(o <= 1);
  }
}

TEST_CASE("ratio bounds") {
  auto wit = build_witness(make_params(8192, 64, 2));
  auto checks = ratio_bound_check(wit);
  std::size_t n1 = 0, n2 = 0;
  for (const auto& rc : checks) {
    CAPTURE(rc.which);
    CAPTURE(rc.i);
    if (rc.which == "keyeq1") ++n1;
    if (rc.which == "keyeq2") ++n2;
    if (!rc.skipped) CHECK(rc.holds);
  }
  CHECK(n1 == 8);
  CHECK(n2 == 3);
  CHECK(checks.front().skipped);  // c * 1 * w = 2w
  // keyeq2 at i = 1 has bound 4 c^(d1 - 1)
  for (const auto& rc : checks)
    if (rc.which == "keyeq2" && rc.i == 1) CHECK(rc.rhs == 16);

  auto w3 = build_witness(make_params(2048, 27, 3));
  for (const auto& rc : ratio_bound_check(w3)) CHECK(rc.holds);

  // d1 = 0: no keyeq2 entries
  for (const auto& rc : ratio_bound_check(build_witness(make_params(16, 2, 3)))) CHECK(rc.which == "keyeq1");
}

TEST_CASE("appendix product") {
  CHECK(appendix_product_check(64, 2, 1).holds);
  CHECK(appendix_product_check(64, 2, 3).holds);
  auto trivial = appendix_product_check(8, 3, 1);
  CHECK(trivial.lhs == 1);
  CHECK(trivial.rhs == q(1, 2));
  CHECK(trivial.holds);
  for (std::int64_t i = 1; i <= 4; ++i) CHECK(appendix_product_check(216, 3, i).holds);
  CHECK_THROWS_AS(appendix_product_check(64, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(appendix_product_check(64, 2, 0), std::invalid_argument);

  // hand computation: w=64, c=2, i=1, d1=3: (32)^2 * (3 - 8/64)/4 * (8 - 2*9/64)/9
  Rational expected = q(1024) * (q(3) - q(8, 64)) / 4 * (q(8) - q(18, 64)) / 9;
  CHECK(appendix_product_check(64, 2, 1).lhs == expected);
}

TEST_CASE("witness is feasible for the dual program") {
  for (auto [N, w, c] : std::vector<std::array<std::int64_t, 3>>{
           {512, 8, 3}, {512, 27, 3}, {64, 2, 2}, {200, 8, 2}, {16, 2, 3}}) {
    auto wit = build_witness(make_params(N, w, c));
    CAPTURE(N);
    CAPTURE(w);
    auto lp = build_laurent_dual(N, w, wit.D1, wit.D2, false);
    auto pts = dual_support_points(N, w, false);
    auto phi = normalized_phi(wit, pts);
    Rational mass;
    for (std::size_t k = 0; k < pts.size(); ++k) mass += abs(phi[k]) * pow(Rational(pts[k]), static_cast<unsigned>(wit.D1));
    CHECK(mass == 1);
    auto x = dual_point_from_phi(pts, phi);
    CHECK(check_feasible(lp, x) == "");
    CHECK(objective_value(lp, x) == dual_objective(wit));
    if (N <= 64) CHECK(optimal_value(lp) >= dual_objective(wit));
  }
}

TEST_CASE("float mirror tracks the exact witness") {
  for (auto [N, w, c] : std::vector<std::array<std::int64_t, 3>>{{8192, 64, 2}, {2048, 27, 3}, {512, 8, 3}}) {
    auto params = make_params(N, w, c);
    auto wit = build_witness(params);
    auto f = build_witness_float(params);
    REQUIRE(f.points == wit.support.full);
    for (std::size_t k = 0; k < f.points.size(); ++k) {
      Rational r = wit.ratio(f.points[k]);
      CHECK(f.signs[k] == sign(r));
      CHECK(std::abs(f.log_ratio[k] - std::log(to_double(abs(r)))) < 1e-9);
    }
    CHECK(std::abs(f.objective - to_double(dual_objective(wit))) < 1e-9);
  }
  auto big = build_witness_float(make_params(1000000, 1000, 3));
  CHECK(big.objective > 0);
  CHECK(big.objective <= 1);
}
