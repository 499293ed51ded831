#pragma once

#include "apxcount/lpsolver/lp.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace apxcount {

/// Points where boundedness is imposed: 1..N, or with restricted_range the
/// set {ceil(w^(1/3))..w} U {2w..N}.
std::vector<std::int64_t> boundedness_points(std::int64_t N, std::int64_t w, bool restricted_range);

/// minimize eps over q(l) = sum_{j<=D1+D2} a_j l^j subject to
///   |q(w) - w^D1| <= eps w^D1, |q(2w) + (2w)^D1| <= eps (2w)^D1,
///   |q(l)| <= (1 + eps) l^D1 on the boundedness points.
/// Variables a0..a{D1+D2} (free) then eps.
LinearProgram build_laurent_primal(std::int64_t N, std::int64_t w, std::int64_t D1, std::int64_t D2,
                                   bool restricted_range = false);

/// The exact LP dual of build_laurent_primal:
///   maximize phi(w) w^D1 - phi(2w) (2w)^D1 - sum_{l != w,2w} |phi(l)| l^D1
///   s.t. sum phi(l) l^j = 0 (j <= D1+D2), sum |phi(l)| l^D1 <= 1,
/// with phi = phi+ - phi-. Variables are ordered phi+(l), phi-(l) for l in
/// dual_support_points(...) order.
LinearProgram build_laurent_dual(std::int64_t N, std::int64_t w, std::int64_t D1, std::int64_t D2,
                                 bool restricted_range = false);

/// Boundedness points plus w and 2w, ascending; the index order of the dual
/// program's phi variables.
std::vector<std::int64_t> dual_support_points(std::int64_t N, std::int64_t w, bool restricted_range);

/// Maps phi values on dual_support_points to the dual program's variables.
std::vector<Rational> dual_point_from_phi(const std::vector<std::int64_t>& points, const std::vector<Rational>& phi);

/// Lattice LP over bivariate p of total degree <= degree: maximize alpha
/// s.t. 2 alpha <= p <= 1 on [2w,N]^2 and 0 <= p <= alpha on
/// [0,w]^2 U [0,w]x[2w,N] U [2w,N]x[0,w] (integer points). Variables are
/// c(i,j) for i+j <= degree (row-major) then alpha. N <= 32.
LinearProgram build_sbqp_bivariate(std::int64_t N, std::int64_t w, std::int64_t degree);

inline constexpr std::int64_t univariate_cap = 512;
inline constexpr std::int64_t bivariate_cap = 32;

/// Empty string when x satisfies every row and bound of lp exactly.
std::string check_feasible(const LinearProgram& lp, const std::vector<Rational>& x);
Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x);

/// Optimal value (throws std::runtime_error if not optimal).
Rational optimal_value(const LinearProgram& lp);

struct DegreeSearch {
  std::optional<std::int64_t> degree;  // empty: not found up to the cap
  std::vector<Rational> values;        // optimum at degrees 0, 1, ...
};

/// Smallest d in [0, cap] with meets(value(d)), scanning upward.
DegreeSearch min_degree_search(const std::function<Rational(std::int64_t)>& value,
                               const std::function<bool(const Rational&)>& meets, std::int64_t cap);

/// Primal family: minimal D2 (with D1 fixed) or minimal D1 (with D2 fixed)
/// reaching eps <= threshold.
DegreeSearch min_positive_degree(std::int64_t N, std::int64_t w, std::int64_t D1, const Rational& threshold,
                                 std::int64_t cap, bool restricted_range = false);
DegreeSearch min_negative_degree(std::int64_t N, std::int64_t w, std::int64_t D2, const Rational& threshold,
                                 std::int64_t cap, bool restricted_range = false);

/// SBQP family: minimal degree with alpha* > 0.
DegreeSearch min_sbqp_degree(std::int64_t N, std::int64_t w, std::int64_t cap);

}  // namespace apxcount
