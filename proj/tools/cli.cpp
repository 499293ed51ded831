#include "apxcount/cli/cli.hpp"

#include "apxcount/acceptance/acceptance.hpp"
#include "apxcount/boolsym/multilinear.hpp"
#include "apxcount/constructions/constructions.hpp"
#include "apxcount/dualwitness/witness.hpp"
#include "apxcount/lpsolver/builders.hpp"
#include "apxcount/numkernel/explosion.hpp"
#include "apxcount/qsim/circuit.hpp"
#include "apxcount/qsim/counting.hpp"
#include "apxcount/qsim/tracedist.hpp"

#include "report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

namespace apxcount {
namespace {

using report::json;

constexpr std::uint64_t default_seed = 20240601;
constexpr std::size_t full_trials = 10000, quick_trials = 1000;

struct Globals {
  std::uint64_t seed = default_seed;
  std::string out_path;
  std::string format = "json";
  bool quick = false;
  bool timing = false;
};

struct Outcome {
  json results;
  int status = 0;
  std::string csv;  // replaces the generic key,value flattening when set

  Outcome(json r = {}, int s = 0, std::string c = {}) : results(std::move(r)), status(s), csv(std::move(c)) {}
};

struct Command {
  std::string path;
  CLI::App* app = nullptr;
  std::function<json()> params;
  std::function<Outcome()> run;
};

json error_object(const std::string& type, const std::string& message, const std::vector<std::string>& args) {
  return json{{"error", {{"type", type}, {"message", message}, {"argv", args}}}};
}

json counting_json(const CountingReport& r) {
  json out{{"trials", r.trials},
           {"successes", r.successes},
           {"aborted", r.aborted},
           {"success_rate", r.success_rate ? json(*r.success_rate) : json(nullptr)},
           {"ci99", {r.ci_low, r.ci_high}},
           {"iterations", r.iterations},
           {"repetitions", r.repetitions},
           {"max_reflections", r.max_reflections},
           {"max_samples", r.max_samples},
           {"max_queries", r.max_queries},
           {"max_total", r.max_total},
           {"planned_success", r.planned_success}};
  return out;
}

json chain_json(const std::vector<ChainLink>& chain) {
  json out = json::array();
  for (const ChainLink& l : chain)
    out.push_back({{"relation", l.relation},
                   {"verdict", to_string(l.verdict)},
                   {"lhs", {report::exact(l.lhs_lo), report::exact(l.lhs_hi)}},
                   {"rhs", {report::exact(l.rhs_lo), report::exact(l.rhs_hi)}},
                   {"lhs_float", {to_double(l.lhs_lo), to_double(l.lhs_hi)}},
                   {"rhs_float", {to_double(l.rhs_lo), to_double(l.rhs_hi)}}});
  return out;
}

json paturi_json(const PaturiCheck& p) {
  return json{{"epsilon", report::exact_with_float(p.epsilon)},
              {"raw_hypothesis", p.raw_hypothesis},
              {"growth", report::high_precision(p.growth)},
              {"growth_at_most_two", p.growth_at_most_two}};
}

json resources_json(const CircuitResources& r) {
  return json{{"T", r.T}, {"R1", r.R1}, {"R2", r.R2}, {"V", r.V}, {"R", r.R()}};
}

json window_json(const FitWindow& w) {
  return json{{"lo", w.lo}, {"hi", w.hi}, {"coefficients", w.coefficients}, {"max_residual", w.max_residual}, {"pass", w.pass}};
}

Circuit circuit_from(const std::string& text) { return text.find('=') == std::string::npos ? fixture_circuit(text) : parse_circuit(text); }

// --- subcommand bodies -----------------------------------------------------

Outcome run_dual_witness(std::int64_t N, std::int64_t w, std::int64_t c, const Rational& slack) {
  DualWitness wit = build_witness(make_params(N, w, c));
  const WitnessParams& p = wit.params;
  json r;
  r["params"] = {{"N", p.N}, {"w", p.w}, {"c", p.c}, {"d1", p.d1}, {"d2", p.d2}, {"d2_effective", wit.d2_effective},
                 {"D1", wit.D1}, {"D2", wit.D2}};
  r["support"] = {{"t1", wit.support.t1}, {"t2", wit.support.t2}, {"full", wit.support.full}};
  json ratios = json::array();
  for (const auto& [l, v] : wit.ratios) ratios.push_back({{"l", l}, {"ratio", report::exact(v)}, {"float", to_double(v)}});
  r["ratios"] = ratios;
  r["norm_weight"] = report::exact_with_float(wit.norm_weight);
  r["objective"] = report::exact_with_float(dual_objective(wit));

  const std::int64_t j_max = wit.D1 + wit.D2;
  std::vector<Rational> sums = orthogonality_check(wit, j_max);
  json orth{{"j_max", j_max}, {"all_zero", std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s == 0; })}};
  json sum_strings = json::array();
  for (const Rational& s : sums) sum_strings.push_back(report::exact(s));
  orth["sums"] = sum_strings;
  if (p.d1 + p.d2 > j_max) {
    // c = 2 merges a point of T2 with 2w, so the nominal top degree is not annihilated
    Rational nominal = orthogonality_check(wit, p.d1 + p.d2).back();
    orth["nominal_j"] = p.d1 + p.d2;
    orth["nominal_sum"] = report::exact(nominal);
  }
  r["orthogonality"] = orth;

  json checks = json::array();
  for (const RatioCheck& ch : ratio_bound_check(wit, slack)) {
    json e{{"which", ch.which}, {"i", ch.i}, {"point", ch.point}, {"skipped", ch.skipped}};
    if (!ch.skipped) {
      e["lhs"] = report::exact(ch.lhs);
      e["rhs"] = report::exact(ch.rhs);
      e["margin"] = report::exact_with_float(Rational(ch.rhs - ch.lhs));
      e["holds"] = ch.holds;
    }
    checks.push_back(e);
  }
  r["ratio_checks"] = {{"slack", report::exact(slack)}, {"checks", checks}};

  json appendix = json::array();
  for (std::int64_t i = 1; i <= p.d1; ++i) {
    ProductCheck pc = appendix_product_check(w, c, i);
    appendix.push_back({{"i", i}, {"lhs", report::exact_with_float(pc.lhs)}, {"rhs", report::exact_with_float(pc.rhs)}, {"holds", pc.holds}});
  }
  r["appendix_product"] = appendix;

  FloatWitness fw = build_witness_float(p);
  r["float_mirror"] = {{"points", fw.points}, {"signs", fw.signs}, {"log_ratio", fw.log_ratio}, {"objective", fw.objective}};
  return {r};
}

json lp_common(const LinearProgram& lp, const LPSolution& sol) {
  json r{{"program", {{"variables", lp.num_vars()}, {"rows", lp.num_rows()}, {"maximize", lp.maximize}}},
         {"status", to_string(sol.status)},
         {"pivots", sol.pivots},
         {"solved_via_dual", sol.solved_via_dual}};
  if (sol.status == LPStatus::optimal) {
    r["value"] = report::exact_with_float(sol.value);
    std::string cert = verify_certificate(lp, sol);
    r["certificate"] = cert.empty() ? "verified" : cert;
  }
  return r;
}

Outcome run_lp_primal(std::int64_t N, std::int64_t w, std::int64_t D1, std::int64_t D2, bool restricted) {
  LinearProgram lp = build_laurent_primal(N, w, D1, D2, restricted);
  LPSolution sol = simplex_solve(lp);
  json r = lp_common(lp, sol);
  if (sol.status == LPStatus::optimal) {
    r["epsilon"] = report::exact(sol.value);
    json coeffs = json::object();
    for (std::size_t i = 0; i + 1 < lp.num_vars(); ++i) coeffs[lp.names[i]] = report::exact(sol.primal[i]);
    r["coefficients"] = coeffs;
  }
  return {r};
}

Outcome run_lp_dual(std::int64_t N, std::int64_t w, std::int64_t D1, std::int64_t D2, bool restricted) {
  LinearProgram lp = build_laurent_dual(N, w, D1, D2, restricted);
  LPSolution sol = simplex_solve(lp);
  json r = lp_common(lp, sol);
  if (sol.status == LPStatus::optimal) {
    std::vector<std::int64_t> pts = dual_support_points(N, w, restricted);
    json phi = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational v = sol.primal[2 * i] - sol.primal[2 * i + 1];
      if (v != 0) phi.push_back({{"l", pts[i]}, {"phi", report::exact(v)}, {"float", to_double(v)}});
    }
    r["phi"] = phi;
  }
  return {r};
}

Outcome run_lp_sbqp(std::int64_t N, std::int64_t w, std::int64_t degree) {
  LinearProgram lp = build_sbqp_bivariate(N, w, degree);
  LPSolution sol = simplex_solve(lp);
  json r = lp_common(lp, sol);
  r["basis"] = "tensor Chebyshev T_i(2x/N-1) T_j(2y/N-1)";
  if (sol.status == LPStatus::optimal) {
    r["alpha"] = report::exact(sol.value);
    r["positive"] = sol.value > 0;
    json coeffs = json::object();
    for (std::size_t i = 0; i + 1 < lp.num_vars(); ++i) coeffs[lp.names[i]] = report::exact(sol.primal[i]);
    r["coefficients"] = coeffs;
  }
  return {r};
}

Outcome run_fedja(std::int64_t w, std::int64_t k_max, std::size_t grid) {
  FedjaPoly fp = fedja_construct(w);
  FedjaReport v = fedja_verify(fp, k_max == 0 ? 4 * w : k_max, grid);
  json r{{"w", fp.w},
         {"d", fp.d},
         {"perfect_cube", fp.perfect_cube},
         {"u", report::poly(fp.u)},
         {"v", report::poly(fp.v)},
         {"jump", report::exact_with_float(fp.jump)},
         {"scale", report::exact_with_float(fp.scale)},
         {"amplifier", report::poly(fp.amplifier)},
         {"amplifier_margin", report::exact_with_float(fp.amplifier_margin)},
         {"assembled", report::poly(fp.assembled)}};
  json violations = json::array();
  for (const FedjaViolation& x : v.violations)
    violations.push_back({{"region", x.region}, {"k", x.k}, {"value", report::exact_with_float(x.value)}});
  r["verify"] = {{"k_max", v.k_max},
                 {"degree", v.degree},
                 {"degree_bound", 8 * fp.d},
                 {"degree_ok", v.degree_ok},
                 {"u_zeros_ok", v.u_zeros_ok},
                 {"u_min", report::interval(v.u_min)},
                 {"u_max", report::interval(v.u_max)},
                 {"no_ok", v.no_ok},
                 {"mid_ok", v.mid_ok},
                 {"yes_points_ok", v.yes_points_ok},
                 {"yes_min", report::interval(v.yes_min)},
                 {"yes_max", report::interval(v.yes_max)},
                 {"yes_certified", v.yes_certified},
                 {"constant_term", report::exact_with_float(v.constant_term)},
                 {"violations", violations},
                 {"ok", v.ok()}};
  return {r, v.ok() ? 0 : 1};
}

Outcome run_cheb_count(std::int64_t N, std::int64_t w, bool paper_variant) {
  Poly P = chebyshev_counting_poly(N, w, paper_variant);
  ChebCountReport c = chebyshev_counting_check(P, N, w);
  json r{{"N", c.N},
         {"w", c.w},
         {"paper_variant", paper_variant},
         {"degree", c.degree},
         {"coefficients", report::poly(P)},
         {"at_w", report::exact_with_float(c.at_w)},
         {"at_w_ok", c.at_w_ok},
         {"max_abs_tail", report::exact_with_float(c.max_abs_tail)},
         {"bounded_ok", c.bounded_ok},
         {"unbounded_points", c.unbounded_points},
         {"rescale", {{"alpha", report::exact_with_float(c.alpha)},
                      {"beta", report::exact_with_float(c.beta)},
                      {"epsilon", report::exact_with_float(c.epsilon)}}}};
  return {r};
}

Outcome run_symmetrize(const std::string& text, const std::string& mode, unsigned n, unsigned block) {
  json r{{"mode", mode}, {"input", text}};
  if (mode == "two-oracle") {
    if (block == 0) throw std::invalid_argument("two-oracle mode needs --block N");
    MultilinearPoly p = parse_multilinear(text, 0, block);
    auto [qst, pxy] = two_oracle_symmetrize(p, block);
    r["n_vars"] = p.n_vars();
    r["q_st"] = report::bivar(qst);
    r["p_xy"] = report::bivar(pxy);
    return {r};
  }
  MultilinearPoly p = parse_multilinear(text, n);
  r["n_vars"] = p.n_vars();
  r["degree"] = p.degree();
  if (mode == "eas") {
    r["result"] = report::poly(eas_symmetrize(p));
    return {r};
  }
  if (mode != "mp") throw std::invalid_argument("unknown mode '" + mode + "' (mp, eas, two-oracle)");
  Poly q = mp_symmetrize(p);
  r["result"] = report::poly(q);
  json values = json::array();
  bool agree = true;
  for (unsigned k = 0; k <= p.n_vars(); ++k) {
    Rational v = q(Rational(k));
    values.push_back(report::exact(v));
    if (p.n_vars() <= 16) agree = agree && v == brute_force_weight_average(p, k);
  }
  r["values"] = values;
  if (p.n_vars() <= 16) r["brute_force_agrees"] = agree;
  return {r, agree ? 0 : 1};
}

Outcome run_explosion(std::int64_t N, std::int64_t w, const std::string& text, std::int64_t fedja_w) {
  LaurentPoly q;
  json source;
  if (fedja_w > 0) {
    // the assembled polynomial in x = 1/k is a pure negative-power Laurent polynomial in k
    const auto& c = fedja_construct(fedja_w).assembled.coeffs();
    std::vector<Rational> rev(c.rbegin(), c.rend());
    q = LaurentPoly(-static_cast<std::int64_t>(c.size()) + 1, rev);
    source = {{"fedja", fedja_w}};
  } else {
    q = parse_laurent(text);
    source = {{"laurent", text}};
  }
  ExplosionReport e = explosion_audit(q, N, w);
  json r{{"source", source},
         {"N", e.N},
         {"w", e.w},
         {"sqrt_w", report::exact(e.sqrt_w)},
         {"u", report::poly(e.u)},
         {"v", report::poly(e.v)},
         {"deg_u", e.deg_u},
         {"deg_v", e.deg_v},
         {"promise_violations", e.promise_violations},
         {"quantities",
          {{"G_u", report::interval(e.G_u)}, {"Delta_u", report::interval(e.Delta_u)}, {"H_u", report::interval(e.H_u)},
           {"I_u", report::interval(e.I_u)}, {"L_u", report::interval(e.L_u)}, {"G_v", report::interval(e.G_v)},
           {"Delta_v", report::interval(e.Delta_v)}, {"H_v", report::interval(e.H_v)}, {"I_v", report::interval(e.I_v)},
           {"L_v", report::interval(e.L_v)}}},
         {"case_u", e.case_u},
         {"case_v", e.case_v},
         {"u_chain", chain_json(e.u_chain)},
         {"v_chain", chain_json(e.v_chain)},
         {"paturi", {{"u_stated", paturi_json(e.paturi_u_stated)}, {"u_actual", paturi_json(e.paturi_u_actual)},
                     {"v_stated", paturi_json(e.paturi_v_stated)}, {"v_actual", paturi_json(e.paturi_v_actual)}}},
         {"discrete_hypothesis_u", e.discrete_hypothesis_u},
         {"discrete_hypothesis_v", e.discrete_hypothesis_v}};
  return {r};
}

Outcome run_profile(const std::string& circuit, std::size_t N, bool monte_carlo, std::size_t samples, std::uint64_t seed) {
  Circuit c = circuit_from(circuit);
  bool exact = !monte_carlo && N <= 12;
  Profile p = acceptance_profile(c, N, exact, seed, samples);
  json r{{"circuit", c.name}, {"resources", resources_json(resources(c))}, {"N", p.N}, {"exact", p.exact}, {"q", p.q}};
  if (!p.exact) r["stderr"] = p.stderr_;
  std::ostringstream csv;
  csv << (p.exact ? "k,q_k\n" : "k,q_k,stderr\n");
  csv.precision(17);
  for (std::size_t k = 1; k <= p.q.size(); ++k) {
    csv << k << "," << p.q[k - 1];
    if (!p.exact) csv << "," << p.stderr_[k - 1];
    csv << "\n";
  }
  return {r, 0, csv.str()};
}

Outcome run_fit(const std::string& circuit, std::size_t N) {
  Circuit c = circuit_from(circuit);
  Profile p = acceptance_profile(c, N, true);
  CircuitResources res = resources(c);
  FitReport f = laurent_fit(p.q, res.T, res.R1, res.R2, res.V);
  json r{{"circuit", c.name}, {"resources", resources_json(res)}, {"N", N}, {"q", p.q},
         {"safe", window_json(f.safe)}, {"tight", window_json(f.tight)}};
  return {r, f.safe.pass ? 0 : 1};
}

Outcome run_verify_all(bool quick, const std::string& mutate, const std::vector<int>& only, bool rederive, bool timing,
                       std::uint64_t seed, std::ostream& err) {
  AcceptanceOptions opts;
  opts.quick = quick;
  opts.seed = seed;
  opts.only = only;
  opts.rederive_fixtures = rederive;
  if (mutate == "phi-sign")
    opts.corrupt_phi_sign = true;
  else if (!mutate.empty())
    throw std::invalid_argument("unknown mutation '" + mutate + "' (phi-sign)");
  json criteria = json::array();
  std::size_t passed = 0, failed = 0;
  run_acceptance(opts, [&](const CriterionResult& c) {
    err << format_line(c) << std::endl;
    json e{{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
    if (timing) e["seconds"] = c.seconds;
    criteria.push_back(e);
    (c.pass ? passed : failed) += 1;
  });
  json r{{"profile", quick ? "quick" : "full"}, {"criteria", criteria}, {"passed", passed}, {"failed", failed}};
  return {r, failed == 0 ? 0 : 1};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for approximate counting lower and upper bounds", "apxcount"};
  // set before subcommands so they inherit: leftovers are reported as unknown flags
  app.allow_extras();
  app.fallthrough();
  app.require_subcommand(1, 1);

  Globals g;
  app.add_option("--seed", g.seed, "64-bit seed for simulations")->capture_default_str();
  app.add_option("--out", g.out_path, "write the report here instead of stdout");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--quick", g.quick, "smaller trial counts and grids");
  app.add_flag("--timing", g.timing, "add wall time to the report (reports are then not byte-reproducible)");

  std::vector<Command> commands;
  auto positive = CLI::PositiveNumber;

  // dual-witness
  std::int64_t dw_N = 0, dw_w = 0, dw_c = 0;
  std::string dw_slack = "2";
  {
    auto* s = app.add_subcommand("dual-witness", "explicit dual witness and its checks");
    s->add_option("--N", dw_N)->required()->check(positive);
    s->add_option("--w", dw_w)->required()->check(positive);
    s->add_option("--c", dw_c)->required()->check(positive);
    s->add_option("--slack", dw_slack, "factor on the asymptotic ratio bound, as num/den")->capture_default_str();
    commands.push_back({"dual-witness", s, [&] { return json{{"N", dw_N}, {"w", dw_w}, {"c", dw_c}, {"slack", dw_slack}}; },
                        [&] { return run_dual_witness(dw_N, dw_w, dw_c, parse_rational(dw_slack)); }});
  }

  // lp primal|dual|sbqp
  std::int64_t lp_N = 0, lp_w = 0, lp_D1 = 0, lp_D2 = 0, lp_degree = 0;
  bool lp_restricted = false;
  {
    auto* lp = app.add_subcommand("lp", "exact primal, dual and lattice linear programs");
    lp->require_subcommand(1, 1);
    for (const std::string kind : {"primal", "dual"}) {
      auto* s = lp->add_subcommand(kind, kind == "primal" ? "minimize eps over Laurent coefficients" : "the exact LP dual");
      s->add_option("--N", lp_N)->required()->check(positive);
      s->add_option("--w", lp_w)->required()->check(positive);
      s->add_option("--D1", lp_D1)->required()->check(CLI::NonNegativeNumber);
      s->add_option("--D2", lp_D2)->required()->check(CLI::NonNegativeNumber);
      s->add_flag("--restricted", lp_restricted, "boundedness only on [w^(1/3), w] and [2w, N]");
      auto params = [&] { return json{{"N", lp_N}, {"w", lp_w}, {"D1", lp_D1}, {"D2", lp_D2}, {"restricted", lp_restricted}}; };
      if (kind == "primal")
        commands.push_back({"lp primal", s, params, [&] { return run_lp_primal(lp_N, lp_w, lp_D1, lp_D2, lp_restricted); }});
      else
        commands.push_back({"lp dual", s, params, [&] { return run_lp_dual(lp_N, lp_w, lp_D1, lp_D2, lp_restricted); }});
    }
    auto* s = lp->add_subcommand("sbqp", "bivariate lattice LP");
    s->add_option("--N", lp_N)->required()->check(positive);
    s->add_option("--w", lp_w)->required()->check(positive);
    s->add_option("--degree", lp_degree)->required()->check(CLI::NonNegativeNumber);
    commands.push_back({"lp sbqp", s, [&] { return json{{"N", lp_N}, {"w", lp_w}, {"degree", lp_degree}}; },
                        [&] { return run_lp_sbqp(lp_N, lp_w, lp_degree); }});
  }

  // fedja
  std::int64_t fe_w = 0, fe_kmax = 0;
  std::size_t fe_grid = 0;
  {
    auto* s = app.add_subcommand("fedja", "explicit degree-O(w^(1/3)) counting polynomial");
    s->add_option("--w", fe_w)->required()->check(positive);
    s->add_option("--kmax", fe_kmax, "check k = 1..kmax (default 4w)");
    s->add_option("--grid", fe_grid, "samples for the interval enclosures (0 = automatic)");
    commands.push_back({"fedja", s, [&] { return json{{"w", fe_w}, {"kmax", fe_kmax}, {"grid", fe_grid}}; },
                        [&] { return run_fedja(fe_w, fe_kmax, fe_grid); }});
  }

  // cheb-count
  std::int64_t cc_N = 0, cc_w = 0;
  bool cc_literal = false;
  {
    auto* s = app.add_subcommand("cheb-count", "Chebyshev counting polynomial and its rescaling");
    s->add_option("--N", cc_N)->required()->check(positive);
    s->add_option("--w", cc_w)->required()->check(positive);
    s->add_flag("--paper-variant", cc_literal, "argument 1 + 2w/N - l/(wN)");
    commands.push_back({"cheb-count", s, [&] { return json{{"N", cc_N}, {"w", cc_w}, {"paper_variant", cc_literal}}; },
                        [&] { return run_cheb_count(cc_N, cc_w, cc_literal); }});
  }

  // symmetrize
  std::string sy_poly, sy_mode = "mp";
  unsigned sy_n = 0, sy_block = 0;
  {
    auto* s = app.add_subcommand("symmetrize", "symmetrize a multilinear polynomial given as text");
    s->add_option("--poly", sy_poly, "e.g. \"2*x1*x2 + x2*x3 + x2\"; y1..yN for the second oracle")->required();
    s->add_option("--mode", sy_mode)->check(CLI::IsMember({"mp", "eas", "two-oracle"}))->capture_default_str();
    s->add_option("--n", sy_n, "number of variables (default: highest index used)");
    s->add_option("--block", sy_block, "block size N for two-oracle mode");
    commands.push_back({"symmetrize", s,
                        [&] { return json{{"poly", sy_poly}, {"mode", sy_mode}, {"n", sy_n}, {"block", sy_block}}; },
                        [&] { return run_symmetrize(sy_poly, sy_mode, sy_n, sy_block); }});
  }

  // qsim
  std::int64_t qs_N = 0, qs_w = 0, qs_budget = 0, qs_L = 0, qs_k = 0;
  std::size_t qs_trials = 0, qs_samples = 256, qs_fitN = 12;
  std::string qs_mode = "samples", qs_circuit;
  bool qs_mc = false;
  CLI::Option* trials_opt[3] = {};
  {
    auto* q = app.add_subcommand("qsim", "state-vector simulations");
    q->require_subcommand(1, 1);
    const char* names[3] = {"reflect", "collision", "classical"};
    const char* help[3] = {"counting with copies of |S> and reflections", "learn a subset from samples, then Grover",
                           "classical query and birthday baselines"};
    for (int i = 0; i < 3; ++i) {
      auto* s = q->add_subcommand(names[i], help[i]);
      s->add_option("--N", qs_N)->required()->check(positive);
      s->add_option("--w", qs_w)->required()->check(positive);
      s->add_option("--budget", qs_budget)->required()->check(CLI::NonNegativeNumber);
      trials_opt[i] = s->add_option("--trials", qs_trials, "default 10^4, 10^3 with --quick");
      if (i == 2) s->add_option("--mode", qs_mode)->check(CLI::IsMember({"queries", "samples"}))->capture_default_str();
      auto params = [&, i] {
        json p{{"N", qs_N}, {"w", qs_w}, {"budget", qs_budget}, {"trials", qs_trials}};
        if (i == 2) p["mode"] = qs_mode;
        return p;
      };
      std::function<Outcome()> run;
      if (i == 0)
        run = [&] { return Outcome{counting_json(run_reflection_counting(qs_N, qs_w, qs_budget, qs_trials, g.seed))}; };
      else if (i == 1)
        run = [&] { return Outcome{counting_json(run_collision_counting(qs_N, qs_w, qs_budget, qs_trials, g.seed))}; };
      else
        run = [&] {
          BaselineMode m = qs_mode == "queries" ? BaselineMode::queries : BaselineMode::samples;
          return Outcome{counting_json(classical_baselines(qs_N, qs_w, m, qs_budget, qs_trials, g.seed))};
        };
      commands.push_back({std::string("qsim ") + names[i], s, params, run});
    }

    auto* pr = q->add_subcommand("profile", "acceptance probability q(k), k = 1..N");
    pr->add_option("--circuit", qs_circuit, "fixture name or circuit text")->required();
    pr->add_option("--N", qs_N)->required()->check(positive);
    pr->add_flag("--monte-carlo", qs_mc, "sample subsets even when N <= 12");
    pr->add_option("--samples", qs_samples, "subsets per k in Monte Carlo mode")->capture_default_str();
    commands.push_back({"qsim profile", pr,
                        [&] { return json{{"circuit", qs_circuit}, {"N", qs_N}, {"monte_carlo", qs_mc}, {"samples", qs_samples}}; },
                        [&] { return run_profile(qs_circuit, static_cast<std::size_t>(qs_N), qs_mc, qs_samples, g.seed); }});

    auto* fi = q->add_subcommand("fit", "fit an exact profile by a Laurent polynomial in k");
    fi->add_option("--circuit", qs_circuit, "fixture name or circuit text")->required();
    fi->add_option("--N", qs_fitN, "universe size, at most 12")->capture_default_str();
    commands.push_back({"qsim fit", fi, [&] { return json{{"circuit", qs_circuit}, {"N", qs_fitN}}; },
                        [&] { return run_fit(qs_circuit, qs_fitN); }});

    auto* td = q->add_subcommand("tracedist", "trace distance between k-fold QSamples of sizes w and 2w");
    td->add_option("--L", qs_L)->required()->check(positive);
    td->add_option("--w", qs_w)->required()->check(positive);
    td->add_option("--k", qs_k)->required()->check(CLI::NonNegativeNumber);
    commands.push_back({"qsim tracedist", td, [&] { return json{{"L", qs_L}, {"w", qs_w}, {"k", qs_k}}; },
                        [&] {
                          return Outcome{json{{"distance", trace_distance_qsamples(qs_L, qs_w, qs_k)}}};
                        }});
  }

  // explosion-audit
  std::int64_t ex_N = 0, ex_w = 0, ex_fedja = 0;
  std::string ex_laurent;
  {
    auto* s = app.add_subcommand("explosion-audit", "quantity table of the explosion argument for a Laurent polynomial");
    s->add_option("--N", ex_N)->required()->check(positive);
    s->add_option("--w", ex_w, "defaults to the --fedja value");
    auto* lo = s->add_option("--laurent", ex_laurent, "e.g. \"1/2 + 3/100*k - 2*k^-1\"");
    auto* fo = s->add_option("--fedja", ex_fedja, "audit the explicit polynomial for this w")->check(positive);
    lo->excludes(fo);
    commands.push_back({"explosion-audit", s,
                        [&] { return json{{"N", ex_N}, {"w", ex_w}, {"laurent", ex_laurent}, {"fedja", ex_fedja}}; },
                        [&] {
                          if (ex_laurent.empty() && ex_fedja == 0) throw std::invalid_argument("give --laurent or --fedja");
                          if (ex_w == 0) ex_w = ex_fedja;
                          if (ex_w == 0) throw std::invalid_argument("--w is required with --laurent");
                          return run_explosion(ex_N, ex_w, ex_laurent, ex_fedja);
                        }});
  }

  // verify-all
  std::string va_mutate;
  std::vector<int> va_only;
  bool va_rederive = false;
  {
    auto* s = app.add_subcommand("verify-all", "run the acceptance criteria");
    s->add_option("--mutate", va_mutate, "test hook: phi-sign flips one witness sign");
    s->add_option("--only", va_only, "criterion numbers")->delimiter(',');
    s->add_flag("--rederive-fixtures", va_rederive, "rerun the full minimal-degree searches");
    commands.push_back({"verify-all", s,
                        [&] { return json{{"mutate", va_mutate}, {"only", va_only}, {"rederive_fixtures", va_rederive}}; },
                        [&] { return run_verify_all(g.quick, va_mutate, va_only, va_rederive, g.timing, g.seed, err); }});
  }

  auto emit = [&](const std::string& text) -> bool {
    if (g.out_path.empty()) {
      out << text;
      return true;
    }
    std::ofstream f(g.out_path, std::ios::binary);
    f << text;
    return static_cast<bool>(f);
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << report::to_json_text(error_object("usage", e.what(), args));
    return 2;
  }
  std::vector<std::string> extra = app.remaining(true);
  if (!extra.empty()) {
    json e = error_object("unknown_flag", "unrecognized argument '" + extra.front() + "'", args);
    e["error"]["flag"] = extra.front();
    out << report::to_json_text(e);
    return 2;
  }

  const Command* chosen = nullptr;
  for (const Command& c : commands)
    if (c.app->parsed()) chosen = &c;
  if (chosen == nullptr) {
    out << report::to_json_text(error_object("usage", "no subcommand given", args));
    return 2;
  }

  // trial counts follow the profile unless given explicitly
  if (std::none_of(std::begin(trials_opt), std::end(trials_opt), [](CLI::Option* t) { return t->count() > 0; }))
    qs_trials = g.quick ? quick_trials : full_trials;

  Outcome result;
  auto start = std::chrono::steady_clock::now();
  try {
    result = chosen->run();
  } catch (const std::exception& e) {
    json err_json = error_object("failed", e.what(), args);
    err_json["error"]["subcommand"] = chosen->path;
    out << report::to_json_text(err_json);
    return 3;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json rep;
  rep["config"] = {{"subcommand", chosen->path},
                   {"params", chosen->params()},
                   {"seed", g.seed},
                   {"format", g.format},
                   {"quick", g.quick},
                   {"out", g.out_path},
                   {"argv", args}};
  rep["results"] = result.results;
  rep["exit_status"] = result.status;
  if (g.timing) rep["wall_time_seconds"] = seconds;

  std::string text;
  if (g.format == "json")
    text = report::to_json_text(rep);
  else if (!result.csv.empty())
    text = result.csv;
  else
    text = report::to_csv(rep);
  if (!emit(text)) {
    out << report::to_json_text(error_object("io", "cannot write '" + g.out_path + "'", args));
    return 4;
  }
  return result.status;
}

}  // namespace apxcount
