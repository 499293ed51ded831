#include "apxcount/qsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace apxcount {

StateVector StateVector::basis(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw std::invalid_argument("basis index out of range");
  StateVector s{Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension))};
  s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::uniform(std::size_t N) {
  if (N == 0) throw std::invalid_argument("uniform state needs N >= 1");
  return {Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(N), 1.0 / std::sqrt(static_cast<double>(N)))};
}

StateVector subset_state(std::size_t N, const std::vector<std::size_t>& S) {
  if (S.empty()) throw std::invalid_argument("|S> needs S nonempty");
  StateVector s{Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(N))};
  const double a = 1.0 / std::sqrt(static_cast<double>(S.size()));
  for (std::size_t i : S) {
    if (i >= N) throw std::invalid_argument("element " + std::to_string(i) + " outside [N]");
    s.amplitudes[static_cast<Eigen::Index>(i)] = a;
  }
  return s;
}

StateVector tensor(const std::vector<StateVector>& parts) {
  Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
  for (const auto& p : parts) {
    Eigen::VectorXcd next(acc.size() * p.amplitudes.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) next.segment(i * p.amplitudes.size(), p.amplitudes.size()) = acc[i] * p.amplitudes;
    acc = std::move(next);
  }
  return {acc};
}

void check_normalized(const StateVector& s) {
  if (std::abs(s.norm_squared() - 1.0) > 1e-9) throw std::logic_error("state norm drifted beyond 1e-9");
}

OracleModel::OracleModel(std::size_t N, std::vector<std::size_t> S) : N_(N), S_(std::move(S)), member_(N, false) {
  if (S_.empty()) throw std::invalid_argument("S must be nonempty");
  std::sort(S_.begin(), S_.end());
  if (std::adjacent_find(S_.begin(), S_.end()) != S_.end()) throw std::invalid_argument("S has repeated elements");
  for (std::size_t i : S_) {
    if (i >= N) throw std::invalid_argument("element " + std::to_string(i) + " outside [N]");
    member_[i] = true;
  }
}

void OracleModel::check_norm(const StateVector& s) const { check_normalized(s); }

StateVector OracleModel::sample() {
  ++samples_;
  return subset_state(N_, S_);
}

namespace {

// (stride, block count, register span) for register reg of an r-register state
struct Layout {
  std::size_t stride, outer, span;
};

Layout layout(std::size_t N, std::size_t reg, std::size_t registers, std::size_t dimension) {
  if (reg >= registers) throw std::invalid_argument("register index out of range");
  std::size_t span = 1;
  for (std::size_t r = 0; r < registers; ++r) span *= N;
  if (dimension != span && dimension != span + 1) throw std::invalid_argument("state dimension does not match the register layout");
  std::size_t stride = 1;
  for (std::size_t r = reg + 1; r < registers; ++r) stride *= N;
  return {stride, span / (stride * N), span};
}

}  // namespace

void reflect_uniform(StateVector& s, std::size_t N, std::size_t reg, std::size_t registers) {
  Layout L = layout(N, reg, registers, s.dimension());
  for (std::size_t o = 0; o < L.outer; ++o)
    for (std::size_t in = 0; in < L.stride; ++in) {
      std::complex<double> sum = 0;
      for (std::size_t i = 0; i < N; ++i) sum += s.amplitudes[static_cast<Eigen::Index>((o * N + i) * L.stride + in)];
      const std::complex<double> mean2 = 2.0 * sum / static_cast<double>(N);
      for (std::size_t i = 0; i < N; ++i) {
        auto& a = s.amplitudes[static_cast<Eigen::Index>((o * N + i) * L.stride + in)];
        a = mean2 - a;
      }
    }
  check_normalized(s);
}

void OracleModel::query(StateVector& s, std::size_t reg, std::size_t registers) {
  Layout L = layout(N_, reg, registers, s.dimension());
  for (std::size_t o = 0; o < L.outer; ++o)
    for (std::size_t i : S_)
      for (std::size_t in = 0; in < L.stride; ++in) s.amplitudes[static_cast<Eigen::Index>((o * N_ + i) * L.stride + in)] *= -1.0;
  ++queries_;
  check_norm(s);
}

void OracleModel::reflect(StateVector& s, std::size_t reg, std::size_t registers) {
  Layout L = layout(N_, reg, registers, s.dimension());
  const double inv = 1.0 / static_cast<double>(S_.size());
  for (std::size_t o = 0; o < L.outer; ++o)
    for (std::size_t in = 0; in < L.stride; ++in) {
      std::complex<double> overlap = 0;
      for (std::size_t i : S_) overlap += s.amplitudes[static_cast<Eigen::Index>((o * N_ + i) * L.stride + in)];
      const std::complex<double> shift = 2.0 * overlap * inv;
      for (std::size_t i : S_) s.amplitudes[static_cast<Eigen::Index>((o * N_ + i) * L.stride + in)] -= shift;
    }
  ++reflections_;
  check_norm(s);
}

void OracleModel::apply_v(StateVector& s) {
  const std::size_t axis = N_ * N_;
  if (s.dimension() != axis + 1) throw std::invalid_argument("V acts on dimension N^2 + 1");
  // phi = (|0^m> - |S>|S>)/sqrt 2;  V = 1 - 2 |phi><phi|
  const double inv_k = 1.0 / static_cast<double>(S_.size());
  std::complex<double> ss = 0;
  for (std::size_t i : S_)
    for (std::size_t j : S_) ss += s.amplitudes[static_cast<Eigen::Index>(i * N_ + j)];
  ss *= inv_k;  // <SS|s>
  const std::complex<double> overlap = (s.amplitudes[static_cast<Eigen::Index>(axis)] - ss) / std::sqrt(2.0);
  const std::complex<double> shift = 2.0 * overlap / std::sqrt(2.0);
  s.amplitudes[static_cast<Eigen::Index>(axis)] -= shift;
  for (std::size_t i : S_)
    for (std::size_t j : S_) s.amplitudes[static_cast<Eigen::Index>(i * N_ + j)] += shift * inv_k;
  ++v_uses_;
  check_norm(s);
}

}  // namespace apxcount
