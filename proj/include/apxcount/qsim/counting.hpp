#pragma once

#include "apxcount/qsim/state.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace apxcount {

/// Independent stream per (seed, trial): schedule never changes outcomes.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct CountingReport {
  std::size_t trials = 0, successes = 0, aborted = 0;
  std::optional<double> success_rate;  // empty when trials == 0
  double ci_low = 0.0, ci_high = 0.0;  // 99% Wilson interval
  std::size_t iterations = 0;          // Grover iterations per repetition
  std::size_t repetitions = 0;         // planned repetitions
  std::size_t max_reflections = 0, max_samples = 0, max_queries = 0;
  std::size_t max_total = 0;           // max over trials of samples + reflections + queries
  double planned_success = 0.0;        // exact worst-case success of the plan
};

/// Grover-style iterates G = R_psi R_S from |psi>, then project onto |psi>:
/// Pr = cos^2(2 t theta), sin^2 theta = |S|/N. The iteration count and
/// repetitions maximize the exact worst-case success within the budget.
CountingReport run_reflection_counting(std::int64_t N, std::int64_t w, std::int64_t reflections_budget, std::size_t trials,
                                       std::uint64_t seed);

/// Amplitudes on (|S>, |S-bar>) after t iterates, from the 2-dimensional model.
std::pair<double, double> reflection_amplitudes_2d(std::int64_t N, std::int64_t k, std::size_t t);

/// The same iterates on the full N-dimensional state through an OracleModel.
StateVector reflection_state_full(OracleModel& oracle, std::size_t t);

/// Learn M subset of S (|M| = ceil(w^(1/3))) from samples, then Grover with M
/// marked, started from fresh copies of |S>: Pr[outcome in M] = sin^2((2t+1) theta),
/// sin^2 theta = |M|/|S|. Budget counts samples plus reflections.
CountingReport run_collision_counting(std::int64_t N, std::int64_t w, std::int64_t budget, std::size_t trials,
                                      std::uint64_t seed);

enum class BaselineMode { queries, samples };
std::string to_string(BaselineMode m);

/// queries: hits among uniform membership queries against the midpoint of
/// the two expectations; samples: birthday collisions among uniform samples
/// from S against the midpoint of C(R,2)/w and C(R,2)/(2w). Ties are coin flips.
CountingReport classical_baselines(std::int64_t N, std::int64_t w, BaselineMode mode, std::int64_t budget, std::size_t trials,
                                   std::uint64_t seed);

}  // namespace apxcount
