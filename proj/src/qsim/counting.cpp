#include "apxcount/qsim/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace apxcount {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::int64_t cube_root_ceil(std::int64_t w) {
  std::int64_t d = 0;
  while (d * d * d < w) ++d;
  return d;
}

void check_promise(std::int64_t N, std::int64_t w) {
  if (w < 1 || 2 * w > N) throw std::invalid_argument("need 1 <= w and 2w <= N");
}

// Pr[Bin(n, p) > tau] + Pr[= tau] / 2 in log space
double binomial_above(std::size_t n, double p, double tau) {
  double out = 0.0;
  for (std::size_t c = 0; c <= n; ++c) {
    double lp = std::lgamma(n + 1.0) - std::lgamma(c + 1.0) - std::lgamma(n - c + 1.0);
    lp += (c > 0 ? c * std::log(p) : 0.0) + (n - c > 0 ? (n - c) * std::log1p(-p) : 0.0);
    double mass = (p <= 0.0) ? (c == 0) : (p >= 1.0) ? (c == n) : std::exp(lp);
    double x = static_cast<double>(c);
    if (x > tau) out += mass;
    else if (x == tau) out += mass / 2;
  }
  return out;
}

// Worst-case exact success of "decide by n Bernoulli outcomes" when the
// per-outcome probability is p_small under |S| = w and p_big under 2w (or
// the reverse; the side is decided by comparison).
double plan_success(std::size_t n, double p_w, double p_2w) {
  if (n == 0) return 0.5;
  const double tau = n * (p_w + p_2w) / 2;
  if (p_w == p_2w) return 0.5;
  if (p_w > p_2w) return std::min(binomial_above(n, p_w, tau), 1.0 - binomial_above(n, p_2w, tau));
  return std::min(1.0 - binomial_above(n, p_w, tau), binomial_above(n, p_2w, tau));
}

// Decision from an observed count: true iff "|S| = 2w".
bool decide_big(std::size_t count, std::size_t n, double p_w, double p_2w, std::mt19937_64& rng) {
  const double tau = n * (p_w + p_2w) / 2;
  const double x = static_cast<double>(count);
  if (n == 0 || p_w == p_2w || x == tau) return rng() & 1;
  return (p_2w > p_w) == (x > tau);
}

void finish(CountingReport& r) {
  if (r.trials == 0) return;
  const double n = static_cast<double>(r.trials), p = r.successes / n, z = 2.5758293035489;
  r.success_rate = p;
  const double denom = 1 + z * z / n, center = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  r.ci_low = center - half;
  r.ci_high = center + half;
}

// 2x2 evolution on (a_S, a_Sbar) with sin^2 theta = k/N
std::pair<double, double> grover_2d(double sin_theta, std::size_t t) {
  const double s = sin_theta, c = std::sqrt(1 - s * s);
  double a = s, b = c;  // |psi> = s|S> + c|S-bar>
  for (std::size_t i = 0; i < t; ++i) {
    a = -a;  // R_S
    const double overlap = s * a + c * b;  // R_psi = 2|psi><psi| - 1
    a = 2 * overlap * s - a;
    b = 2 * overlap * c - b;
  }
  return {a, b};
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) { return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial)); }

std::pair<double, double> reflection_amplitudes_2d(std::int64_t N, std::int64_t k, std::size_t t) {
  if (k < 1 || k > N) throw std::invalid_argument("need 1 <= k <= N");
  return grover_2d(std::sqrt(static_cast<double>(k) / static_cast<double>(N)), t);
}

StateVector reflection_state_full(OracleModel& oracle, std::size_t t) {
  StateVector s = StateVector::uniform(oracle.N());
  for (std::size_t i = 0; i < t; ++i) {
    oracle.reflect(s);
    reflect_uniform(s, oracle.N());
  }
  return s;
}

CountingReport run_reflection_counting(std::int64_t N, std::int64_t w, std::int64_t reflections_budget, std::size_t trials,
                                       std::uint64_t seed) {
  check_promise(N, w);
  if (reflections_budget < 0) throw std::invalid_argument("budget must be nonnegative");
  auto return_prob = [&](std::int64_t k, std::size_t t) {
    auto [a, b] = reflection_amplitudes_2d(N, k, t);
    const double s = std::sqrt(static_cast<double>(k) / static_cast<double>(N));
    const double overlap = s * a + std::sqrt(1 - s * s) * b;
    return overlap * overlap;
  };
  CountingReport r;
  double best = 0.5;
  for (std::size_t t = 1; t <= static_cast<std::size_t>(reflections_budget); ++t) {
    std::size_t reps = static_cast<std::size_t>(reflections_budget) / t;
    double s = plan_success(reps, return_prob(w, t), return_prob(2 * w, t));
    if (s > best + 1e-12) {
      best = s;
      r.iterations = t;
      r.repetitions = reps;
    }
  }
  r.planned_success = best;
  const double p_w = r.iterations ? return_prob(w, r.iterations) : 0.5;
  const double p_2w = r.iterations ? return_prob(2 * w, r.iterations) : 0.5;
  r.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    const bool big = rng() & 1;
    const double p = big ? p_2w : p_w;
    std::bernoulli_distribution coin(p);
    std::size_t count = 0;
    for (std::size_t i = 0; i < r.repetitions; ++i) count += coin(rng);
    r.successes += decide_big(count, r.repetitions, p_w, p_2w, rng) == big;
  }
  r.max_reflections = r.iterations * r.repetitions;
  r.max_total = r.max_reflections;
  finish(r);
  return r;
}

CountingReport run_collision_counting(std::int64_t N, std::int64_t w, std::int64_t budget, std::size_t trials, std::uint64_t seed) {
  check_promise(N, w);
  if (w < 8) throw std::invalid_argument("collision counting requires w >= 8");
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  std::int64_t m = cube_root_ceil(w);
  auto in_m_prob = [&](std::int64_t size, std::size_t t) {
    auto [a, b] = grover_2d(std::sqrt(static_cast<double>(m) / static_cast<double>(size)), t);
    (void)b;
    return a * a;
  };
  CountingReport r;
  // plan against the nominal m samples for M; each repetition costs one
  // fresh |S> plus t reflections
  const std::int64_t rest = budget - m;
  double best = 0.5;
  for (std::int64_t t = 0; rest > 0 && t < rest; ++t) {
    std::size_t reps = static_cast<std::size_t>(rest / (t + 1));
    double s = plan_success(reps, in_m_prob(w, t), in_m_prob(2 * w, t));
    if (s > best + 1e-12) {
      best = s;
      r.iterations = static_cast<std::size_t>(t);
      r.repetitions = reps;
    }
  }
  r.planned_success = best;
  const double p_w = in_m_prob(w, r.iterations), p_2w = in_m_prob(2 * w, r.iterations);
  r.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    const bool big = rng() & 1;
    const std::int64_t size = big ? 2 * w : w;
    // S is a uniformly random subset; only its size matters to the algorithm
    std::vector<std::size_t> S(static_cast<std::size_t>(N));
    for (std::size_t i = 0; i < S.size(); ++i) S[i] = i;
    std::shuffle(S.begin(), S.end(), rng);
    S.resize(static_cast<std::size_t>(size));
    std::uniform_int_distribution<std::size_t> pick(0, S.size() - 1);
    std::vector<std::size_t> M;
    std::size_t samples = 0;
    while (static_cast<std::int64_t>(M.size()) < m && samples < static_cast<std::size_t>(10 * m)) {
      std::size_t x = S[pick(rng)];
      ++samples;
      if (std::find(M.begin(), M.end(), x) == M.end()) M.push_back(x);
    }
    if (static_cast<std::int64_t>(M.size()) < m || static_cast<std::int64_t>(samples) > budget) {
      ++r.aborted;
      continue;
    }
    const std::size_t reps = r.repetitions == 0 ? 0 : static_cast<std::size_t>((budget - static_cast<std::int64_t>(samples)) / static_cast<std::int64_t>(r.iterations + 1));
    const double p = big ? p_2w : p_w;
    std::bernoulli_distribution outcome(p);
    std::size_t count = 0;
    for (std::size_t i = 0; i < reps; ++i) count += outcome(rng);
    r.successes += decide_big(count, reps, p_w, p_2w, rng) == big;
    r.max_samples = std::max(r.max_samples, samples + reps);
    r.max_reflections = std::max(r.max_reflections, reps * r.iterations);
    r.max_total = std::max(r.max_total, samples + reps * (r.iterations + 1));
  }
  finish(r);
  return r;
}

std::string to_string(BaselineMode m) { return m == BaselineMode::queries ? "queries" : "samples"; }

CountingReport classical_baselines(std::int64_t N, std::int64_t w, BaselineMode mode, std::int64_t budget, std::size_t trials,
                                   std::uint64_t seed) {
  check_promise(N, w);
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  CountingReport r;
  r.trials = trials;
  r.repetitions = static_cast<std::size_t>(budget);
  const double B = static_cast<double>(budget);
  double p_w, p_2w;  // expected statistic per unit, used only for the threshold
  if (mode == BaselineMode::queries) {
    p_w = static_cast<double>(w) / N;
    p_2w = 2.0 * w / N;
  } else {
    p_w = 1.0 / w;
    p_2w = 1.0 / (2.0 * w);
  }
  const double pairs = B * (B - 1) / 2;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto rng = trial_rng(seed, trial);
    const bool big = rng() & 1;
    const std::int64_t size = big ? 2 * w : w;
    bool guess_big;
    if (mode == BaselineMode::queries) {
      // membership of a uniform index: S is WLOG {0..size-1}
      std::uniform_int_distribution<std::int64_t> idx(0, N - 1);
      std::size_t hits = 0;
      for (std::int64_t i = 0; i < budget; ++i) hits += idx(rng) < size;
      guess_big = decide_big(hits, static_cast<std::size_t>(budget), p_w, p_2w, rng);
    } else {
      std::uniform_int_distribution<std::int64_t> idx(0, size - 1);
      std::unordered_map<std::int64_t, std::size_t> seen;
      std::size_t collisions = 0;
      for (std::int64_t i = 0; i < budget; ++i) collisions += seen[idx(rng)]++;
      const double tau = pairs * (p_w + p_2w) / 2, x = static_cast<double>(collisions);
      guess_big = (pairs == 0 || x == tau) ? static_cast<bool>(rng() & 1) : x < tau;
    }
    r.successes += guess_big == big;
  }
  if (mode == BaselineMode::queries) r.max_queries = static_cast<std::size_t>(budget);
  else r.max_samples = static_cast<std::size_t>(budget);
  r.max_total = static_cast<std::size_t>(budget);
  finish(r);
  return r;
}

}  // namespace apxcount
