#include "apxcount/qsim/tracedist.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace apxcount {

DensityMatrix qsample_density(std::int64_t L, std::int64_t size, std::int64_t k) {
  if (L < 1 || size < 1 || size > L) throw std::invalid_argument("need 1 <= |S| <= L");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (L > 24) throw std::invalid_argument("subset enumeration capped at L <= 24");
  std::int64_t dim = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    dim *= L;
    if (dim > 4096) throw std::invalid_argument("dimension L^k exceeds the 4096 cap");
  }
  DensityMatrix rho{static_cast<std::size_t>(dim), Eigen::MatrixXd::Zero(dim, dim)};
  std::size_t count = 0;
  const double amp = std::pow(static_cast<double>(size), -0.5 * static_cast<double>(k));
  for (std::uint32_t mask = (1U << size) - 1; mask < (1U << L);) {
    // support of |S>^{(x)k}: all k-tuples over S
    std::vector<std::int64_t> S;
    for (std::int64_t i = 0; i < L; ++i)
      if (mask & (1U << i)) S.push_back(i);
    std::vector<Eigen::Index> support{0};
    for (std::int64_t r = 0; r < k; ++r) {
      std::vector<Eigen::Index> next;
      for (auto base : support)
        for (auto i : S) next.push_back(base * L + i);
      support = std::move(next);
    }
    for (auto i : support)
      for (auto j : support) rho.entries(i, j) += amp * amp;
    ++count;
    std::uint32_t lo = mask & -mask, hi = mask + lo;
    mask = (((hi ^ mask) >> 2) / lo) | hi;
  }
  rho.entries /= static_cast<double>(count);
  rho.entries = (rho.entries + rho.entries.transpose()) / 2;
  if (std::abs(rho.entries.trace() - 1.0) > 1e-9) throw std::logic_error("density matrix trace drifted beyond 1e-9");
  return rho;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dimension != b.dimension) throw std::invalid_argument("dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.entries - b.entries, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return es.eigenvalues().cwiseAbs().sum() / 2;
}

double trace_distance_qsamples(std::int64_t L, std::int64_t w, std::int64_t k) {
  if (w < 1 || 2 * w > L) throw std::invalid_argument("need 1 <= w and 2w <= L");
  return trace_distance(qsample_density(L, w, k), qsample_density(L, 2 * w, k));
}

}  // namespace apxcount
