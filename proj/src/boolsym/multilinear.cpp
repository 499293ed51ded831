#include "apxcount/boolsym/multilinear.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace apxcount {

MultilinearPoly::MultilinearPoly(unsigned n_vars) : n_vars_(n_vars) {
  if (n_vars > max_vars) throw std::invalid_argument("MultilinearPoly supports at most 24 variables");
}

unsigned MultilinearPoly::degree() const {
  unsigned d = 0;
  for (const auto& [mask, c] : terms_) d = std::max(d, static_cast<unsigned>(std::popcount(mask)));
  return d;
}

MultilinearPoly& MultilinearPoly::add_term(std::uint32_t mask, const Rational& c) {
  if (n_vars_ < 32 && (mask >> n_vars_) != 0)
    throw std::invalid_argument("term mask " + std::to_string(mask) + " uses a variable beyond n_vars");
  Rational& slot = terms_[mask];
  slot += c;
  if (slot == 0) terms_.erase(mask);
  return *this;
}

Rational MultilinearPoly::operator()(std::uint32_t input) const {
  Rational acc;
  for (const auto& [mask, c] : terms_)
    if ((mask & input) == mask) acc += c;
  return acc;
}

Poly mp_symmetrize(const MultilinearPoly& p) {
  const unsigned n = p.n_vars();
  std::vector<Rational> xs, ys;
  for (unsigned k = 0; k <= n; ++k) {
    // E_{|X|=k} prod_{i in M} x_i = C(n-|M|, k-|M|) / C(n,k)
    Rational value;
    const BigInt total = binomial(n, k);
    for (const auto& [mask, c] : p.terms()) {
      unsigned m = static_cast<unsigned>(std::popcount(mask));
      if (m > k) continue;
      value += c * make_rational(binomial(n - m, k - m), total);
    }
    xs.emplace_back(k);
    ys.push_back(value);
  }
  return interpolate(xs, ys);
}

Poly eas_symmetrize(const MultilinearPoly& p) {
  Poly out;
  for (const auto& [mask, c] : p.terms()) out += Poly::monomial(c, static_cast<std::size_t>(std::popcount(mask)));
  return out;
}

std::pair<BivarPoly, BivarPoly> two_oracle_symmetrize(const MultilinearPoly& r, unsigned N) {
  if (r.n_vars() != 2 * N)
    throw std::invalid_argument("two_oracle_symmetrize: expected " + std::to_string(2 * N) + " variables, got " +
                                std::to_string(r.n_vars()));
  const std::uint32_t low = (N >= 32) ? ~0U : ((1U << N) - 1U);
  const Rational Nq(N);
  // ff(x, a) / ff(N, a) as a polynomial in one variable
  auto averaged = [&](unsigned a) {
    Poly f = falling_factorial(a);
    return f * Rational(1 / falling_factorial(a)(Nq));
  };
  BivarPoly q, p;
  for (const auto& [mask, c] : r.terms()) {
    unsigned a = static_cast<unsigned>(std::popcount(mask & low));
    unsigned b = static_cast<unsigned>(std::popcount(mask >> N));
    q += BivarPoly::monomial(c / (pow(Nq, a) * pow(Nq, b)), a, b);
    Poly fx = averaged(a), fy = averaged(b);
    BivarPoly term;
    for (std::size_t i = 0; i < fx.coeffs().size(); ++i)
      for (std::size_t j = 0; j < fy.coeffs().size(); ++j)
        term += BivarPoly::monomial(c * fx.coeffs()[i] * fy.coeffs()[j], i, j);
    p += term;
  }
  return {q, p};
}

Rational brute_force_weight_average(const MultilinearPoly& p, unsigned k) {
  const unsigned n = p.n_vars();
  if (n > 20) throw std::invalid_argument("brute_force_weight_average supports at most 20 variables");
  if (k > n) throw std::invalid_argument("weight " + std::to_string(k) + " exceeds n_vars");
  Rational sum;
  std::uint64_t count = 0;
  if (k == 0) return p(0);
  // Gosper's hack: next integer with the same popcount
  std::uint32_t x = (1U << k) - 1U;
  const std::uint32_t limit = 1U << n;
  while (x < limit) {
    sum += p(x);
    ++count;
    std::uint32_t c = x & (~x + 1U);
    std::uint32_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return sum / static_cast<unsigned long>(count);
}

}  // namespace apxcount
