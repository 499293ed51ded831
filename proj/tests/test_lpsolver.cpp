#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apxcount/lpsolver/builders.hpp"

#include <optional>
#include <random>

using namespace apxcount;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Solve a square system exactly; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Vertex enumeration oracle for: min c.x, A x <= b, x >= 0.
std::optional<Rational> vertex_oracle(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                      const std::vector<Rational>& c) {
  const std::size_t n = c.size(), m = A.size();
  std::vector<std::vector<Rational>> all = A;
  std::vector<Rational> rhs = b;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = -1;
    all.push_back(e);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  const std::size_t total = m + n;
  for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::vector<std::vector<Rational>> sa;
    std::vector<Rational> sb;
    for (std::size_t i = 0; i < total; ++i)
      if (mask & (1U << i)) {
        sa.push_back(all[i]);
        sb.push_back(rhs[i]);
      }
    auto x = solve_square(sa, sb);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < total && feasible; ++i) {
      Rational lhs;
      for (std::size_t j = 0; j < n; ++j) lhs += all[i][j] * (*x)[j];
      feasible = lhs <= rhs[i];
    }
    if (!feasible) continue;
    Rational v;
    for (std::size_t j = 0; j < n; ++j) v += c[j] * (*x)[j];
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

TEST_CASE("simplex trivial programs") {
  LinearProgram a;
  a.add_variable("x", VarBound::free, 1);
  a.add_row({q(1)}, Sense::ge, 3);
  auto sa = simplex_solve(a);
  CHECK(sa.status == LPStatus::optimal);
  CHECK(sa.value == 3);
  CHECK(sa.dual[0] == 1);

  LinearProgram b;
  b.maximize = true;
  b.add_variable("x", VarBound::nonnegative, 1);
  b.add_variable("y", VarBound::nonnegative, 1);
  b.add_row({q(1), q(1)}, Sense::le, 1);
  auto sb = simplex_solve(b);
  CHECK(sb.value == 1);
  CHECK(verify_certificate(b, sb).empty());

  LinearProgram inf;
  inf.add_variable("x");
  inf.add_row({q(1)}, Sense::le, -1);
  CHECK(simplex_solve(inf).status == LPStatus::infeasible);

  LinearProgram unb;
  unb.maximize = true;
  unb.add_variable("x", VarBound::nonnegative, 1);
  unb.add_row({q(1)}, Sense::ge, 2);
  CHECK(simplex_solve(unb).status == LPStatus::unbounded);

  LinearProgram dup;
  dup.add_variable("x");
  dup.add_variable("x");
  CHECK_THROWS_AS(simplex_solve(dup), std::invalid_argument);
}

TEST_CASE("Beale cycling example terminates with the optimum") {
  std::vector<std::vector<Rational>> A{{q(1, 4), q(-8), q(-1), q(9)}, {q(1, 2), q(-12), q(-1, 2), q(3)}, {q(0), q(0), q(1), q(0)}};
  std::vector<Rational> b{q(0), q(0), q(1)};
  std::vector<Rational> c{q(-3, 4), q(20), q(-1, 2), q(6)};
  LinearProgram lp;
  for (int j = 0; j < 4; ++j) lp.add_variable("x" + std::to_string(j + 4), VarBound::nonnegative, c[static_cast<std::size_t>(j)]);
  for (std::size_t i = 0; i < 3; ++i) lp.add_row(A[i], Sense::le, b[i]);
  auto oracle = vertex_oracle(A, b, c);
  REQUIRE(oracle);
  CHECK(*oracle == q(-5, 4));
  for (PivotRule rule : {PivotRule::bland, PivotRule::dantzig}) {
    SimplexOptions opt;
    opt.rule = rule;
    auto sol = simplex_solve(lp, opt);
    CHECK(sol.status == LPStatus::optimal);
    CHECK(sol.value == *oracle);
  }
}

TEST_CASE("random small programs agree with vertex enumeration") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-5, 5), pos(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3), m = 2 + static_cast<std::size_t>(trial % 4);
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
    std::vector<Rational> b(m), c(n);
    for (auto& row : A)
      for (auto& v : row) v = coef(rng);
    for (auto& v : b) v = pos(rng);
    for (auto& v : c) v = coef(rng);
    // box so the program is bounded
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n);
      e[j] = 1;
      A.push_back(e);
      b.push_back(10);
    }
    LinearProgram lp;
    for (std::size_t j = 0; j < n; ++j) lp.add_variable("x" + std::to_string(j), VarBound::nonnegative, c[j]);
    for (std::size_t i = 0; i < A.size(); ++i) lp.add_row(A[i], Sense::le, b[i]);
    auto oracle = vertex_oracle(A, b, c);
    auto sol = simplex_solve(lp);
    REQUIRE(oracle);
    CHECK(sol.status == LPStatus::optimal);
    CHECK(sol.value == *oracle);
    // the dualized path must agree as well
    SimplexOptions via_dual;
    via_dual.dualize_ratio = 0;
    CHECK(simplex_solve(lp, via_dual).value == *oracle);
    LPSolution dsol = simplex_solve(dual_program(lp));
    CHECK(dsol.value == *oracle);
  }
}

TEST_CASE("laurent primal examples") {
  CHECK(optimal_value(build_laurent_primal(4, 1, 0, 4)) == 0);
  CHECK(optimal_value(build_laurent_primal(20, 2, 0, 0)) == 1);
  Rational e2 = optimal_value(build_laurent_primal(20, 2, 0, 2));
  Rational e3 = optimal_value(build_laurent_primal(20, 2, 0, 3));
  CHECK(e3 < e2);
  CHECK_THROWS_AS(build_laurent_primal(3, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_laurent_primal(8, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("laurent primal/dual strong duality") {
  for (std::int64_t N : {8, 20}) {
    for (std::int64_t w : {1, 2}) {
      for (std::int64_t D1 = 0; D1 <= 2; ++D1)
        for (std::int64_t D2 = 0; D2 <= 4; ++D2) {
          Rational p = optimal_value(build_laurent_primal(N, w, D1, D2));
          Rational d = optimal_value(build_laurent_dual(N, w, D1, D2));
          CHECK(p == d);
        }
    }
  }
  CHECK(optimal_value(build_laurent_dual(20, 2, 0, 0)) == 1);
  CHECK(optimal_value(build_laurent_primal(40, 4, 1, 3, true)) == optimal_value(build_laurent_dual(40, 4, 1, 3, true)));
}

TEST_CASE("restricted range never increases the optimum") {
  for (std::int64_t D2 = 0; D2 <= 4; ++D2)
    CHECK(optimal_value(build_laurent_primal(64, 8, 1, D2, true)) <= optimal_value(build_laurent_primal(64, 8, 1, D2)));
}

TEST_CASE("monotonicity in D1 and D2") {
  Rational prev = 2;
  for (std::int64_t D2 = 0; D2 <= 6; ++D2) {
    Rational e = optimal_value(build_laurent_primal(32, 2, 0, D2));
    CHECK(e <= prev);
    prev = e;
  }
  prev = 2;
  for (std::int64_t D1 = 0; D1 <= 4; ++D1) {
    Rational e = optimal_value(build_laurent_primal(32, 2, D1, 1));
    CHECK(e <= prev);
    prev = e;
  }
}

TEST_CASE("sbqp lattice program") {
  CHECK(optimal_value(build_sbqp_bivariate(16, 2, 0)) == 0);
  Rational prev = 0;
  for (std::int64_t d = 0; d <= 4; ++d) {
    Rational a = optimal_value(build_sbqp_bivariate(16, 2, d));
    CHECK(a >= prev);
    CHECK(a <= q(1, 2));
    prev = a;
  }
  CHECK(optimal_value(build_sbqp_bivariate(16, 2, 2 * 2 + 2)) > 0);
  CHECK_THROWS_AS(build_sbqp_bivariate(33, 2, 1), std::invalid_argument);
  auto search = min_sbqp_degree(16, 2, 8);
  REQUIRE(search.degree);
  CHECK(*search.degree >= 1);
}

TEST_CASE("feasibility helpers") {
  LinearProgram lp = build_laurent_dual(20, 2, 0, 0);
  auto pts = dual_support_points(20, 2, false);
  std::vector<Rational> phi(pts.size());
  // phi(w) = 1/2, phi(2w) = -1/2 satisfies the j = 0 moment and normalization
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k] == 2) phi[k] = q(1, 2);
    if (pts[k] == 4) phi[k] = q(-1, 2);
  }
  auto x = dual_point_from_phi(pts, phi);
  CHECK(check_feasible(lp, x).empty());
  CHECK(objective_value(lp, x) == 1);
  phi[0] = q(1, 10);
  CHECK_FALSE(check_feasible(lp, dual_point_from_phi(pts, phi)).empty());
}
