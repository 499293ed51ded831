#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace apxcount {

struct StateVector {
  Eigen::VectorXcd amplitudes;

  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm_squared() const { return amplitudes.squaredNorm(); }

  static StateVector basis(std::size_t dimension, std::size_t index);
  static StateVector uniform(std::size_t N);  // |psi>
};

/// |S> = |S|^(-1/2) sum_{i in S} |i> on dimension N.
StateVector subset_state(std::size_t N, const std::vector<std::size_t>& S);

/// r-fold tensor product of single-register states (register 0 most significant).
StateVector tensor(const std::vector<StateVector>& parts);

/// Access to a hidden set S through the primitives the algorithms may use;
/// every application bumps exactly one counter and is followed by a norm check.
///
/// Register operations act on a state of dimension N^r or N^r + 1; in the
/// latter the last coordinate is the |0^m> axis adjoined for V, which
/// register operations leave unchanged.
class OracleModel {
 public:
  OracleModel(std::size_t N, std::vector<std::size_t> S);

  std::size_t N() const { return N_; }
  const std::vector<std::size_t>& S() const { return S_; }
  bool contains(std::size_t i) const { return member_[i]; }

  std::size_t queries() const { return queries_; }
  std::size_t samples() const { return samples_; }
  std::size_t reflections() const { return reflections_; }
  std::size_t v_uses() const { return v_uses_; }

  StateVector sample();  // a fresh copy of |S>
  void query(StateVector& s, std::size_t reg = 0, std::size_t registers = 1);    // O_S (phase form)
  void reflect(StateVector& s, std::size_t reg = 0, std::size_t registers = 1);  // R_S = 1 - 2|S><S|
  void apply_v(StateVector& s);  // reflection about (|0^m> - |S>|S>)/sqrt 2 on dimension N^2 + 1

 private:
  void check_norm(const StateVector& s) const;
  std::size_t N_;
  std::vector<std::size_t> S_;
  std::vector<bool> member_;
  std::size_t queries_ = 0, samples_ = 0, reflections_ = 0, v_uses_ = 0;
};

/// 2|psi><psi| - 1 on one register (uniform psi); does not touch S.
void reflect_uniform(StateVector& s, std::size_t N, std::size_t reg = 0, std::size_t registers = 1);

/// Throws std::logic_error when | |s|^2 - 1 | > 1e-9.
void check_normalized(const StateVector& s);

}  // namespace apxcount
