#include "apxcount/lpsolver/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace apxcount {

std::string to_string(Sense s) {
  switch (s) {
    case Sense::le: return "<=";
    case Sense::eq: return "=";
    case Sense::ge: return ">=";
  }
  return "?";
}

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

std::size_t LinearProgram::add_variable(std::string name, VarBound bound, Rational cost) {
  names.push_back(std::move(name));
  bounds.push_back(bound);
  objective.push_back(std::move(cost));
  return objective.size() - 1;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Sense sense, Rational b) {
  if (coeffs.size() > num_vars()) throw std::invalid_argument("row has more coefficients than variables");
  coeffs.resize(num_vars());
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(std::move(b));
}

void LinearProgram::validate() const {
  const std::size_t n = num_vars();
  if (bounds.size() != n || names.size() != n) throw std::invalid_argument("variable metadata size mismatch");
  if (senses.size() != rows.size() || rhs.size() != rows.size())
    throw std::invalid_argument("row metadata size mismatch");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != n) throw std::invalid_argument("row " + std::to_string(i) + " is not rectangular");
  std::set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate variable name '" + name + "'");
}

namespace {

// A row's dual is sign-flipped in the dual program when it would otherwise
// be nonpositive.
bool flipped_row(const LinearProgram& lp, std::size_t i) {
  return lp.maximize ? lp.senses[i] == Sense::ge : lp.senses[i] == Sense::le;
}

// min c.x, A x = b, x >= 0, b >= 0, solved on a dense tableau with one
// artificial column per row. Artificial columns stay in the tableau (never
// re-entering in phase 2) so their reduced costs give the duals.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c, PivotRule rule)
      : m_(a.size()), n_(c.size()), rule_(rule), cost_(std::move(c)) {
    t_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      t_[i] = std::move(a[i]);
      t_[i].resize(n_ + m_);
      t_[i][n_ + i] = 1;
    }
    rhs_ = std::move(b);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  LPStatus solve() {
    // phase 1: minimize the sum of artificials
    d_.assign(n_ + m_, Rational(0));
    obj_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) d_[j] -= t_[i][j];
      obj_ -= rhs_[i];
    }
    if (run(n_ + m_) == LPStatus::unbounded) throw std::logic_error("phase 1 cannot be unbounded");
    if (obj_ != 0) return LPStatus::infeasible;
    drive_out_artificials();

    // phase 2
    d_.assign(n_ + m_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) d_[j] = cost_[j];
    obj_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t bv = basis_[i];
      if (bv >= n_ || cost_[bv] == 0) continue;
      Rational cb = cost_[bv];
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (t_[i][j] != 0) d_[j] -= cb * t_[i][j];
      obj_ -= cb * rhs_[i];
    }
    return run(n_);
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    return x;
  }

  // y_i = -(reduced cost of artificial i) under phase-2 costs
  std::vector<Rational> dual() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = -d_[n_ + i];
    return y;
  }

  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t pivots() const { return pivots_; }

 private:
  // Columns [0, limit) may enter.
  LPStatus run(std::size_t limit) {
    // Dantzig pricing falls back to Bland's rule (which cannot cycle) only
    // after a long run of degenerate pivots; any strict improvement resets it.
    const std::size_t patience = std::max<std::size_t>(2000, 8 * (m_ + n_));
    std::size_t degenerate_streak = 0;
    for (;;) {
      const bool bland = rule_ == PivotRule::bland || degenerate_streak > patience;
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (d_[j] >= 0) continue;
        if (enter == limit || (!bland && d_[j] < d_[enter])) enter = j;
        if (bland) break;
      }
      if (enter == limit) return LPStatus::optimal;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = t_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return LPStatus::unbounded;
      degenerate_streak = (best == 0) ? degenerate_streak + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const std::size_t width = n_ + m_;
    std::vector<Rational>& prow = t_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width; ++j)
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    rhs_[r] *= inv;
    Rational f;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      f = t_[i][c];
      for (std::size_t j : nz) t_[i][j] -= f * prow[j];
      rhs_[i] -= f * rhs_[r];
    }
    if (d_[c] != 0) {
      f = d_[c];
      for (std::size_t j : nz) d_[j] -= f * prow[j];
      obj_ -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Pivot zero-level artificials out of the basis where a structural column
  // allows it; rows where none does are redundant and keep their artificial.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  std::size_t m_, n_;
  PivotRule rule_;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<Rational> d_;
  Rational obj_;  // negated objective value
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

LPSolution solve_direct(const LinearProgram& lp, PivotRule rule) {
  const std::size_t n = lp.num_vars(), m = lp.num_rows();
  // standard-form columns: one per nonnegative var, two per free var, one
  // slack per inequality
  std::vector<std::size_t> pos(n), neg(n, SIZE_MAX);
  std::vector<std::string> col_names;
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos[j] = cols++;
    col_names.push_back(lp.names[j]);
    if (lp.bounds[j] == VarBound::free) {
      neg[j] = cols++;
      col_names.push_back(lp.names[j] + "(neg)");
    }
  }
  std::vector<std::size_t> slack(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.senses[i] != Sense::eq) {
      slack[i] = cols++;
      col_names.push_back("slack" + std::to_string(i));
    }

  std::vector<Rational> c(cols);
  for (std::size_t j = 0; j < n; ++j) {
    Rational cj = lp.maximize ? Rational(-lp.objective[j]) : lp.objective[j];
    c[pos[j]] = cj;
    if (neg[j] != SIZE_MAX) c[neg[j]] = -cj;
  }
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols));
  std::vector<Rational> b(m);
  std::vector<bool> negated(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][pos[j]] = lp.rows[i][j];
      if (neg[j] != SIZE_MAX) a[i][neg[j]] = -lp.rows[i][j];
    }
    if (lp.senses[i] == Sense::le) a[i][slack[i]] = 1;
    if (lp.senses[i] == Sense::ge) a[i][slack[i]] = -1;
    b[i] = lp.rhs[i];
    if (b[i] < 0) {
      negated[i] = true;
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  }

  Tableau tab(std::move(a), std::move(b), std::move(c), rule);
  LPSolution sol;
  sol.status = tab.solve();
  sol.pivots = tab.pivots();
  if (sol.status != LPStatus::optimal) return sol;

  std::vector<Rational> xs = tab.primal();
  sol.primal.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sol.primal[j] = xs[pos[j]];
    if (neg[j] != SIZE_MAX) sol.primal[j] -= xs[neg[j]];
  }
  std::vector<Rational> ys = tab.dual();
  sol.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = negated[i] ? Rational(-ys[i]) : ys[i];
    sol.dual[i] = lp.maximize ? Rational(-y) : y;
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i)
    if (tab.basis()[i] < cols) sol.basis.push_back(col_names[tab.basis()[i]]);
  for (std::size_t j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.primal[j];
  return sol;
}

}  // namespace

LinearProgram dual_program(const LinearProgram& lp) {
  lp.validate();
  LinearProgram d;
  d.maximize = !lp.maximize;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const bool flip = flipped_row(lp, i);
    VarBound bound = lp.senses[i] == Sense::eq ? VarBound::free : VarBound::nonnegative;
    d.add_variable("y" + std::to_string(i), bound, flip ? Rational(-lp.rhs[i]) : lp.rhs[i]);
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    std::vector<Rational> row(lp.num_rows());
    for (std::size_t i = 0; i < lp.num_rows(); ++i) row[i] = flipped_row(lp, i) ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
    Sense s = lp.bounds[j] == VarBound::free ? Sense::eq : (lp.maximize ? Sense::ge : Sense::le);
    d.add_row(std::move(row), s, lp.objective[j]);
  }
  return d;
}

std::string verify_certificate(const LinearProgram& lp, const LPSolution& sol) {
  const std::size_t n = lp.num_vars(), m = lp.num_rows();
  if (sol.primal.size() != n || sol.dual.size() != m) return "certificate has the wrong shape";
  for (std::size_t j = 0; j < n; ++j)
    if (lp.bounds[j] == VarBound::nonnegative && sol.primal[j] < 0) return "variable " + lp.names[j] + " is negative";
  for (std::size_t i = 0; i < m; ++i) {
    Rational ax;
    for (std::size_t j = 0; j < n; ++j)
      if (lp.rows[i][j] != 0) ax += lp.rows[i][j] * sol.primal[j];
    bool ok = lp.senses[i] == Sense::le ? ax <= lp.rhs[i] : lp.senses[i] == Sense::ge ? ax >= lp.rhs[i] : ax == lp.rhs[i];
    if (!ok) return "row " + std::to_string(i) + " violated";
  }
  // sign of duals: for minimization, ge -> y >= 0, le -> y <= 0
  for (std::size_t i = 0; i < m; ++i) {
    int s = sign(sol.dual[i]) * (lp.maximize ? -1 : 1);
    if ((lp.senses[i] == Sense::ge && s < 0) || (lp.senses[i] == Sense::le && s > 0))
      return "dual of row " + std::to_string(i) + " has the wrong sign";
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational reduced = lp.objective[j];
    for (std::size_t i = 0; i < m; ++i)
      if (lp.rows[i][j] != 0) reduced -= lp.rows[i][j] * sol.dual[i];
    int s = sign(reduced) * (lp.maximize ? -1 : 1);
    if (lp.bounds[j] == VarBound::free ? s != 0 : s < 0) return "reduced cost of " + lp.names[j] + " infeasible";
  }
  Rational primal_value, dual_value;
  for (std::size_t j = 0; j < n; ++j) primal_value += lp.objective[j] * sol.primal[j];
  for (std::size_t i = 0; i < m; ++i) dual_value += lp.rhs[i] * sol.dual[i];
  if (primal_value != sol.value) return "reported value differs from c.x";
  if (dual_value != primal_value) return "duality gap " + to_string(Rational(primal_value - dual_value));
  return {};
}

LPSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& options) {
  lp.validate();
  LPSolution sol;
  if (options.dualize_ratio != 0 && lp.num_rows() > options.dualize_ratio * (lp.num_vars() + 1)) {
    LinearProgram d = dual_program(lp);
    LPSolution ds = solve_direct(d, options.rule);
    sol.pivots = ds.pivots;
    sol.solved_via_dual = true;
    sol.basis = ds.basis;
    // weak duality: dual infeasible -> primal infeasible or unbounded;
    // dual unbounded -> primal infeasible
    if (ds.status == LPStatus::unbounded) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
    if (ds.status == LPStatus::infeasible) {
      // distinguish by checking primal feasibility with a zero objective
      LinearProgram feas = lp;
      for (auto& c : feas.objective) c = 0;
      SimplexOptions direct = options;
      direct.dualize_ratio = 0;
      sol.status = simplex_solve(feas, direct).status == LPStatus::optimal ? LPStatus::unbounded : LPStatus::infeasible;
      return sol;
    }
    sol.status = LPStatus::optimal;
    sol.primal = ds.dual;
    sol.dual.resize(lp.num_rows());
    for (std::size_t i = 0; i < lp.num_rows(); ++i)
      sol.dual[i] = flipped_row(lp, i) ? Rational(-ds.primal[i]) : ds.primal[i];
    for (std::size_t j = 0; j < lp.num_vars(); ++j) sol.value += lp.objective[j] * sol.primal[j];
  } else {
    sol = solve_direct(lp, options.rule);
  }
  if (sol.status == LPStatus::optimal) {
    std::string err = verify_certificate(lp, sol);
    if (!err.empty()) throw std::logic_error("simplex certificate check failed: " + err);
  }
  return sol;
}

}  // namespace apxcount
