#include "apxcount/lpsolver/builders.hpp"

#include <algorithm>
#include <stdexcept>

namespace apxcount {
namespace {

void check_params(std::int64_t N, std::int64_t w, std::int64_t D1, std::int64_t D2) {
  if (w < 1) throw std::invalid_argument("w must be >= 1");
  if (2 * w > N) throw std::invalid_argument("need 2w <= N");
  if (D1 < 0 || D2 < 0) throw std::invalid_argument("degrees must be nonnegative");
}

Rational power(std::int64_t base, std::int64_t e) { return pow(Rational(base), static_cast<unsigned>(e)); }

// (l^0, l^1, ..., l^K)
std::vector<Rational> powers(std::int64_t l, std::int64_t K) {
  std::vector<Rational> out(static_cast<std::size_t>(K) + 1);
  Rational p = 1;
  for (auto& v : out) {
    v = p;
    p *= l;
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> boundedness_points(std::int64_t N, std::int64_t w, bool restricted_range) {
  std::vector<std::int64_t> out;
  if (!restricted_range) {
    for (std::int64_t l = 1; l <= N; ++l) out.push_back(l);
    return out;
  }
  std::int64_t lo = integer_root(w, 3);
  if (lo * lo * lo < w) ++lo;
  lo = std::max<std::int64_t>(lo, 1);
  for (std::int64_t l = lo; l <= w; ++l) out.push_back(l);
  for (std::int64_t l = 2 * w; l <= N; ++l) out.push_back(l);
  return out;
}

LinearProgram build_laurent_primal(std::int64_t N, std::int64_t w, std::int64_t D1, std::int64_t D2,
                                   bool restricted_range) {
  check_params(N, w, D1, D2);
  const std::int64_t K = D1 + D2;
  LinearProgram lp;
  for (std::int64_t j = 0; j <= K; ++j) lp.add_variable("a" + std::to_string(j), VarBound::free);
  const std::size_t eps = lp.add_variable("eps", VarBound::nonnegative, 1);

  // lower <= v.a + sign * eps * h  and  v.a - eps * h <= upper
  auto add_abs = [&](std::int64_t l, const Rational& h, const Rational& center, const Rational& width) {
    std::vector<Rational> row = powers(l, K);
    row.resize(lp.num_vars());
    row[eps] = -h;
    lp.add_row(row, Sense::le, center + width);
    row[eps] = h;
    lp.add_row(row, Sense::ge, center - width);
  };
  const Rational W = power(w, D1), W2 = power(2 * w, D1);
  add_abs(w, W, W, 0);
  add_abs(2 * w, W2, -W2, 0);
  for (std::int64_t l : boundedness_points(N, w, restricted_range)) {
    Rational L = power(l, D1);
    add_abs(l, L, 0, L);
  }
  return lp;
}

std::vector<std::int64_t> dual_support_points(std::int64_t N, std::int64_t w, bool restricted_range) {
  std::vector<std::int64_t> pts = boundedness_points(N, w, restricted_range);
  pts.push_back(w);
  pts.push_back(2 * w);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

LinearProgram build_laurent_dual(std::int64_t N, std::int64_t w, std::int64_t D1, std::int64_t D2,
                                 bool restricted_range) {
  check_params(N, w, D1, D2);
  const std::int64_t K = D1 + D2;
  const std::vector<std::int64_t> pts = dual_support_points(N, w, restricted_range);
  LinearProgram lp;
  lp.maximize = true;
  for (std::int64_t l : pts) {
    Rational L = power(l, D1);
    Rational plus = -L, minus = -L;  // off the two special points |phi| is a cost
    if (l == w) {
      plus = L;
      minus = -L;
    } else if (l == 2 * w) {
      plus = -L;
      minus = L;
    }
    lp.add_variable("phi+(" + std::to_string(l) + ")", VarBound::nonnegative, plus);
    lp.add_variable("phi-(" + std::to_string(l) + ")", VarBound::nonnegative, minus);
  }
  for (std::int64_t j = 0; j <= K; ++j) {
    std::vector<Rational> row(lp.num_vars());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Rational v = power(pts[k], j);
      row[2 * k] = v;
      row[2 * k + 1] = -v;
    }
    lp.add_row(std::move(row), Sense::eq, 0);
  }
  std::vector<Rational> norm(lp.num_vars());
  for (std::size_t k = 0; k < pts.size(); ++k) norm[2 * k] = norm[2 * k + 1] = power(pts[k], D1);
  lp.add_row(std::move(norm), Sense::le, 1);
  return lp;
}

std::vector<Rational> dual_point_from_phi(const std::vector<std::int64_t>& points, const std::vector<Rational>& phi) {
  if (points.size() != phi.size()) throw std::invalid_argument("phi must have one value per support point");
  std::vector<Rational> x(2 * phi.size());
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (phi[k] > 0) x[2 * k] = phi[k];
    if (phi[k] < 0) x[2 * k + 1] = -phi[k];
  }
  return x;
}

LinearProgram build_sbqp_bivariate(std::int64_t N, std::int64_t w, std::int64_t degree) {
  if (w < 1 || 2 * w >= N) throw std::invalid_argument("need 1 <= w and 2w < N");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (N > bivariate_cap) throw std::invalid_argument("bivariate lattice LP capped at N <= 32");
  LinearProgram lp;
  lp.maximize = true;
  std::vector<std::pair<std::int64_t, std::int64_t>> mono;
  for (std::int64_t i = 0; i <= degree; ++i)
    for (std::int64_t j = 0; i + j <= degree; ++j) {
      mono.emplace_back(i, j);
      lp.add_variable("c" + std::to_string(i) + "_" + std::to_string(j), VarBound::free);
    }
  const std::size_t alpha = lp.add_variable("alpha", VarBound::nonnegative, 1);

  // Coefficients are taken in the basis T_i(2x/N - 1) T_j(2y/N - 1): the
  // same polynomial space as x^i y^j, but far better scaled for pivoting.
  std::vector<std::vector<Rational>> cheb(static_cast<std::size_t>(N) + 1);
  for (std::int64_t x = 0; x <= N; ++x) {
    Rational t = make_rational(2 * x, N) - 1;
    auto& row = cheb[static_cast<std::size_t>(x)];
    row.resize(static_cast<std::size_t>(degree) + 1);
    row[0] = 1;
    if (degree >= 1) row[1] = t;
    for (std::size_t k = 2; k < row.size(); ++k) row[k] = 2 * t * row[k - 1] - row[k - 2];
  }
  auto values = [&](std::int64_t x, std::int64_t y) {
    std::vector<Rational> row(lp.num_vars());
    for (std::size_t k = 0; k < mono.size(); ++k)
      row[k] = cheb[static_cast<std::size_t>(x)][static_cast<std::size_t>(mono[k].first)] *
               cheb[static_cast<std::size_t>(y)][static_cast<std::size_t>(mono[k].second)];
    return row;
  };
  auto in_no = [&](std::int64_t v) { return v <= w; };
  auto in_yes = [&](std::int64_t v) { return v >= 2 * w; };
  for (std::int64_t x = 0; x <= N; ++x)
    for (std::int64_t y = 0; y <= N; ++y) {
      if (in_yes(x) && in_yes(y)) {
        std::vector<Rational> row = values(x, y);
        lp.add_row(row, Sense::le, 1);
        row[alpha] = -2;
        lp.add_row(row, Sense::ge, 0);
      } else if ((in_no(x) || in_yes(x)) && (in_no(y) || in_yes(y))) {
        // p <= 1 here is implied by p <= alpha <= 1/2
        std::vector<Rational> row = values(x, y);
        lp.add_row(row, Sense::ge, 0);
        row[alpha] = -1;
        lp.add_row(row, Sense::le, 0);
      }
    }
  return lp;
}

std::string check_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_vars()) return "point has the wrong dimension";
  for (std::size_t j = 0; j < x.size(); ++j)
    if (lp.bounds[j] == VarBound::nonnegative && x[j] < 0) return "variable " + lp.names[j] + " is negative";
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    Rational ax;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (lp.rows[i][j] != 0 && x[j] != 0) ax += lp.rows[i][j] * x[j];
    const Rational& b = lp.rhs[i];
    bool ok = lp.senses[i] == Sense::le ? ax <= b : lp.senses[i] == Sense::ge ? ax >= b : ax == b;
    if (!ok) return "row " + std::to_string(i) + " violated: " + to_string(ax) + " " + to_string(lp.senses[i]) + " " + to_string(b);
  }
  return {};
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational v;
  for (std::size_t j = 0; j < x.size(); ++j) v += lp.objective[j] * x[j];
  return v;
}

Rational optimal_value(const LinearProgram& lp) {
  LPSolution sol = simplex_solve(lp);
  if (sol.status != LPStatus::optimal) throw std::runtime_error("LP not optimal: " + to_string(sol.status));
  return sol.value;
}

DegreeSearch min_degree_search(const std::function<Rational(std::int64_t)>& value,
                               const std::function<bool(const Rational&)>& meets, std::int64_t cap) {
  DegreeSearch out;
  for (std::int64_t d = 0; d <= cap; ++d) {
    out.values.push_back(value(d));
    if (meets(out.values.back())) {
      out.degree = d;
      break;
    }
  }
  return out;
}

DegreeSearch min_positive_degree(std::int64_t N, std::int64_t w, std::int64_t D1, const Rational& threshold,
                                 std::int64_t cap, bool restricted_range) {
  return min_degree_search(
      [&](std::int64_t d) { return optimal_value(build_laurent_primal(N, w, D1, d, restricted_range)); },
      [&](const Rational& eps) { return eps <= threshold; }, cap);
}

DegreeSearch min_negative_degree(std::int64_t N, std::int64_t w, std::int64_t D2, const Rational& threshold,
                                 std::int64_t cap, bool restricted_range) {
  return min_degree_search(
      [&](std::int64_t d) { return optimal_value(build_laurent_primal(N, w, d, D2, restricted_range)); },
      [&](const Rational& eps) { return eps <= threshold; }, cap);
}

DegreeSearch min_sbqp_degree(std::int64_t N, std::int64_t w, std::int64_t cap) {
  return min_degree_search([&](std::int64_t d) { return optimal_value(build_sbqp_bivariate(N, w, d)); },
                           [](const Rational& alpha) { return alpha > 0; }, cap);
}

}  // namespace apxcount
