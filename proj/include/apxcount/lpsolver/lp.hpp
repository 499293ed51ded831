#pragma once

#include "apxcount/numkernel/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace apxcount {

enum class Sense { le, eq, ge };
enum class VarBound { nonnegative, free };
enum class LPStatus { optimal, infeasible, unbounded };
enum class PivotRule { bland, dantzig };

std::string to_string(Sense s);
std::string to_string(LPStatus s);

/// Exact LP: optimize objective . x subject to rows[i] . x (sense) rhs[i].
struct LinearProgram {
  bool maximize = false;
  std::vector<Rational> objective;
  std::vector<VarBound> bounds;
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }

  /// Returns the new variable's index. Names must be unique.
  std::size_t add_variable(std::string name, VarBound bound = VarBound::nonnegative, Rational cost = 0);
  /// Short rows are padded with zeros.
  void add_row(std::vector<Rational> coeffs, Sense sense, Rational b);
  /// Throws std::invalid_argument on shape mismatches or duplicate names.
  void validate() const;
};

/// Dual values use the Lagrangian convention value = rhs . dual, so for a
/// minimization duals are >= 0 on ge rows and <= 0 on le rows (reversed
/// for maximization).
struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::vector<std::string> basis;  // basic variables of the program actually pivoted
  std::size_t pivots = 0;
  bool solved_via_dual = false;
};

struct SimplexOptions {
  // dantzig = largest reduced cost, switching to Bland's rule during long
  // degenerate stretches; bland = Bland's rule throughout.
  PivotRule rule = PivotRule::dantzig;
  // Solve the dual program instead when rows exceed this multiple of columns.
  // 0 disables.
  std::size_t dualize_ratio = 2;
};

/// Two-phase tableau simplex over exact rationals. An optimal answer is
/// re-verified (primal feasibility, dual feasibility, equal objectives)
/// before returning; a failed verification throws std::logic_error.
LPSolution simplex_solve(const LinearProgram& lp, const SimplexOptions& options = {});

/// The LP dual in the Lagrangian convention (dual variables of le rows of a
/// minimization are negated so every dual variable is free or nonnegative).
LinearProgram dual_program(const LinearProgram& lp);

/// Exact certificate check; returns an empty string when sol is a valid
/// optimal primal/dual pair, otherwise a description of the first failure.
std::string verify_certificate(const LinearProgram& lp, const LPSolution& sol);

}  // namespace apxcount
