#pragma once

#include "apxcount/qsim/state.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apxcount {

enum class InitKind { sample, uniform };
enum class StepKind { query, reflect, apply_v, reflect_uniform };
enum class AcceptKind { always, project_uniform, measure_equal, project_axis };

struct Step {
  StepKind kind = StepKind::query;
  std::size_t reg = 0;
};

/// A fixed small circuit: per-register preparations (or the |0^m> axis),
/// a list of primitives, and a final two-outcome measurement.
struct Circuit {
  std::string name;
  std::size_t registers = 1;  // 1 or 2
  bool v_axis = false;        // adjoin |0^m>; requires 2 registers
  bool start_on_axis = false; // start in |0^m> instead of init
  std::vector<InitKind> init;
  std::vector<Step> steps;
  AcceptKind accept = AcceptKind::always;
};

struct CircuitResources {
  std::size_t T = 0, R1 = 0, R2 = 0, V = 0;
  std::size_t R() const { return R1 + 2 * R2; }
};

/// Throws std::invalid_argument on an inconsistent circuit.
void validate(const Circuit& c);
CircuitResources resources(const Circuit& c);

/// "name=...;regs=2;axis;init=sample,sample;steps=reflect@0,query@1,v,reflect_uniform@0;accept=equal"
/// ("axis" adjoins |0^m>, "start=axis" starts there). Unknown primitives are rejected.
Circuit parse_circuit(const std::string& text);

/// The circuits used for the structural fits.
std::vector<Circuit> fixture_circuits();
Circuit fixture_circuit(const std::string& name);

/// Acceptance probability for one hidden set; `oracle` receives the counts.
double acceptance_probability(const Circuit& c, OracleModel& oracle);

struct Profile {
  std::size_t N = 0;
  bool exact = true;
  std::vector<double> q;       // q[k-1] = q(k), k = 1..N
  std::vector<double> stderr_; // zero in exact mode
};

/// q(k) = average acceptance over |S| = k. Exact mode enumerates all
/// subsets (N <= 12); otherwise `samples` random subsets per k.
Profile acceptance_profile(const Circuit& c, std::size_t N, bool exact, std::uint64_t seed = 0, std::size_t samples = 256);

struct FitWindow {
  std::int64_t lo = 0, hi = 0;
  std::vector<double> coefficients;  // for exponents lo..hi
  double max_residual = 0.0;
  bool pass = false;  // max_residual < 1e-8
};

struct FitReport {
  FitWindow safe;   // [-(R + 2V), 2(T + R) + 2V]
  FitWindow tight;  // [-(R + 2V), 2T + R + 2V]
};

/// Least-squares fit of q(1..N) by sum_e a_e k^e. Throws when the safe
/// window has more exponents than points.
FitReport laurent_fit(const std::vector<double>& q, std::size_t T, std::size_t R1, std::size_t R2, std::size_t v_uses);

/// Fit on an explicit window (used for anti-tests).
FitWindow laurent_fit_window(const std::vector<double>& q, std::int64_t lo, std::int64_t hi);

}  // namespace apxcount
