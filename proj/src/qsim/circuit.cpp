#include "apxcount/qsim/circuit.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace apxcount {

void validate(const Circuit& c) {
  if (c.registers < 1 || c.registers > 2) throw std::invalid_argument("circuits use 1 or 2 registers");
  if (c.v_axis && c.registers != 2) throw std::invalid_argument("the |0^m> axis needs 2 registers");
  if (c.start_on_axis && !c.v_axis) throw std::invalid_argument("start=axis needs the axis");
  if (!c.start_on_axis && c.init.size() != c.registers) throw std::invalid_argument("one preparation per register");
  for (const Step& s : c.steps) {
    if (s.kind == StepKind::apply_v && !c.v_axis) throw std::invalid_argument("V needs the |0^m> axis");
    if (s.kind != StepKind::apply_v && s.reg >= c.registers) throw std::invalid_argument("step register out of range");
  }
  if (c.accept == AcceptKind::measure_equal && c.registers != 2) throw std::invalid_argument("equal needs 2 registers");
  if (c.accept == AcceptKind::project_axis && !c.v_axis) throw std::invalid_argument("project_axis needs the axis");
}

CircuitResources resources(const Circuit& c) {
  CircuitResources r;
  if (!c.start_on_axis)
    for (InitKind k : c.init) r.R1 += k == InitKind::sample;
  for (const Step& s : c.steps) {
    r.T += s.kind == StepKind::query;
    r.R2 += s.kind == StepKind::reflect;
    r.V += s.kind == StepKind::apply_v;
  }
  return r;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  for (const std::string& field : split(text, ';')) {
    auto eq = field.find('=');
    std::string key = field.substr(0, eq), value = eq == std::string::npos ? "" : field.substr(eq + 1);
    if (key == "name") {
      c.name = value;
    } else if (key == "regs") {
      c.registers = std::stoul(value);
    } else if (key == "axis") {
      c.v_axis = true;
    } else if (key == "start") {
      if (value != "axis") throw std::invalid_argument("unsupported start '" + value + "'");
      c.start_on_axis = true;
    } else if (key == "init") {
      for (const std::string& v : split(value, ',')) {
        if (v == "sample") c.init.push_back(InitKind::sample);
        else if (v == "uniform") c.init.push_back(InitKind::uniform);
        else throw std::invalid_argument("unsupported preparation '" + v + "'");
      }
    } else if (key == "steps") {
      for (const std::string& v : split(value, ',')) {
        auto at = v.find('@');
        std::string op = v.substr(0, at);
        Step s;
        if (at != std::string::npos) s.reg = std::stoul(v.substr(at + 1));
        if (op == "query") s.kind = StepKind::query;
        else if (op == "reflect") s.kind = StepKind::reflect;
        else if (op == "v") s.kind = StepKind::apply_v;
        else if (op == "reflect_uniform") s.kind = StepKind::reflect_uniform;
        else throw std::invalid_argument("unsupported primitive '" + op + "'");
        c.steps.push_back(s);
      }
    } else if (key == "accept") {
      if (value == "always") c.accept = AcceptKind::always;
      else if (value == "uniform") c.accept = AcceptKind::project_uniform;
      else if (value == "equal") c.accept = AcceptKind::measure_equal;
      else if (value == "axis") c.accept = AcceptKind::project_axis;
      else throw std::invalid_argument("unsupported measurement '" + value + "'");
    } else {
      throw std::invalid_argument("unknown circuit field '" + key + "'");
    }
  }
  validate(c);
  return c;
}

std::vector<Circuit> fixture_circuits() {
  return {
      parse_circuit("name=one-sample;init=sample;accept=always"),
      parse_circuit("name=two-sample-collision;regs=2;init=sample,sample;accept=equal"),
      parse_circuit("name=sample-overlap;init=sample;accept=uniform"),
      parse_circuit("name=uniform-reflect;init=uniform;steps=reflect@0;accept=uniform"),
      parse_circuit("name=uniform-query;init=uniform;steps=query@0;accept=uniform"),
      parse_circuit("name=grover-step;init=uniform;steps=query@0,reflect_uniform@0,query@0;accept=uniform"),
      parse_circuit("name=sample-grover;regs=2;init=sample,uniform;steps=reflect@1,reflect_uniform@1;accept=equal"),
      parse_circuit("name=v-collision;regs=2;axis;start=axis;steps=v;accept=equal"),
      parse_circuit("name=v-uniform;regs=2;axis;init=uniform,uniform;steps=v,reflect@0;accept=equal"),
  };
}

Circuit fixture_circuit(const std::string& name) {
  for (auto& c : fixture_circuits())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown fixture circuit '" + name + "'");
}

double acceptance_probability(const Circuit& c, OracleModel& oracle) {
  validate(c);
  const std::size_t N = oracle.N();
  std::size_t span = 1;
  for (std::size_t r = 0; r < c.registers; ++r) span *= N;
  const std::size_t dim = span + (c.v_axis ? 1 : 0);

  StateVector s;
  if (c.start_on_axis) {
    s = StateVector::basis(dim, span);
  } else {
    std::vector<StateVector> parts;
    for (InitKind k : c.init) parts.push_back(k == InitKind::sample ? oracle.sample() : StateVector::uniform(N));
    s = tensor(parts);
    if (c.v_axis) {
      s.amplitudes.conservativeResize(static_cast<Eigen::Index>(dim));
      s.amplitudes[static_cast<Eigen::Index>(span)] = 0.0;
    }
  }
  const StateVector psi = StateVector::uniform(N);
  for (const Step& st : c.steps) {
    switch (st.kind) {
      case StepKind::query: oracle.query(s, st.reg, c.registers); break;
      case StepKind::reflect: oracle.reflect(s, st.reg, c.registers); break;
      case StepKind::apply_v: oracle.apply_v(s); break;
      case StepKind::reflect_uniform: reflect_uniform(s, N, st.reg, c.registers); break;
    }
  }
  switch (c.accept) {
    case AcceptKind::always: return 1.0;
    case AcceptKind::project_uniform: {
      std::vector<StateVector> parts(c.registers, psi);
      StateVector target = tensor(parts);
      return std::norm(target.amplitudes.dot(s.amplitudes.head(static_cast<Eigen::Index>(span))));
    }
    case AcceptKind::measure_equal: {
      double p = 0.0;
      for (std::size_t i = 0; i < N; ++i) p += std::norm(s.amplitudes[static_cast<Eigen::Index>(i * N + i)]);
      return p;
    }
    case AcceptKind::project_axis: return std::norm(s.amplitudes[static_cast<Eigen::Index>(span)]);
  }
  throw std::logic_error("unreachable");
}

Profile acceptance_profile(const Circuit& c, std::size_t N, bool exact, std::uint64_t seed, std::size_t samples) {
  validate(c);
  if (N == 0) throw std::invalid_argument("N must be positive");
  if (exact && N > 12) throw std::invalid_argument("exact subset averaging is capped at N <= 12");
  Profile p;
  p.N = N;
  p.exact = exact;
  p.q.assign(N, 0.0);
  p.stderr_.assign(N, 0.0);
  for (std::size_t k = 1; k <= N; ++k) {
    if (exact) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::uint32_t mask = (1U << k) - 1; mask < (1U << N);) {
        std::vector<std::size_t> S;
        for (std::size_t i = 0; i < N; ++i)
          if (mask & (1U << i)) S.push_back(i);
        OracleModel o(N, S);
        sum += acceptance_probability(c, o);
        ++count;
        std::uint32_t lo = mask & -mask, hi = mask + lo;  // next subset of the same size
        mask = (((hi ^ mask) >> 2) / lo) | hi;
      }
      p.q[k - 1] = sum / static_cast<double>(count);
    } else {
      std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + k);
      std::vector<std::size_t> all(N);
      for (std::size_t i = 0; i < N; ++i) all[i] = i;
      double sum = 0.0, sq = 0.0;
      for (std::size_t t = 0; t < samples; ++t) {
        std::shuffle(all.begin(), all.end(), rng);
        OracleModel o(N, std::vector<std::size_t>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k)));
        double a = acceptance_probability(c, o);
        sum += a;
        sq += a * a;
      }
      double n = static_cast<double>(samples), mean = sum / n;
      p.q[k - 1] = mean;
      p.stderr_[k - 1] = samples > 1 ? std::sqrt(std::max(0.0, (sq - n * mean * mean) / (n - 1)) / n) : 0.0;
    }
  }
  return p;
}

FitWindow laurent_fit_window(const std::vector<double>& q, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty exponent window");
  const auto n = static_cast<Eigen::Index>(q.size());
  const auto m = static_cast<Eigen::Index>(hi - lo + 1);
  if (m > n)
    throw std::invalid_argument("window of " + std::to_string(m) + " exponents is underdetermined: need N >= " + std::to_string(m));
  Eigen::MatrixXd A(n, m);
  Eigen::VectorXd b(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    b[r] = q[static_cast<std::size_t>(r)];
    for (Eigen::Index e = 0; e < m; ++e) A(r, e) = std::pow(static_cast<double>(r + 1), static_cast<double>(lo + e));
  }
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index e = 0; e < m; ++e) A.col(e) /= scale[e];
  Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
  FitWindow out;
  out.lo = lo;
  out.hi = hi;
  out.max_residual = (A * x - b).cwiseAbs().maxCoeff();
  for (Eigen::Index e = 0; e < m; ++e) out.coefficients.push_back(x[e] / scale[e]);
  out.pass = out.max_residual < 1e-8;
  return out;
}

FitReport laurent_fit(const std::vector<double>& q, std::size_t T, std::size_t R1, std::size_t R2, std::size_t v_uses) {
  const auto R = static_cast<std::int64_t>(R1 + 2 * R2), t = static_cast<std::int64_t>(T), v = static_cast<std::int64_t>(v_uses);
  FitReport r;
  r.safe = laurent_fit_window(q, -(R + 2 * v), 2 * (t + R) + 2 * v);
  r.tight = laurent_fit_window(q, -(R + 2 * v), 2 * t + R + 2 * v);
  return r;
}

}  // namespace apxcount
