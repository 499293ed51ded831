#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace apxcount {

/// QSample amplitudes are real, so the density matrices are real symmetric.
struct DensityMatrix {
  std::size_t dimension = 0;
  Eigen::MatrixXd entries;
};

/// rho_{L,size,k} = E_{|S| = size} (|S><S|)^{(x)k} by enumeration over all
/// subsets; trace checked to 1e-9 and symmetrized. Requires L^k <= 4096.
DensityMatrix qsample_density(std::int64_t L, std::int64_t size, std::int64_t k);

/// (1/2) sum |eigenvalues| of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Trace distance between rho_{L,w,k} and rho_{L,2w,k}; requires 2w <= L.
double trace_distance_qsamples(std::int64_t L, std::int64_t w, std::int64_t k);

}  // namespace apxcount
