#include "apxcount/dualwitness/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apxcount {

WitnessParams make_params(std::int64_t N, std::int64_t w, std::int64_t c) {
  if (w < 1) throw std::invalid_argument("w must be >= 1");
  if (2 * w >= N) throw std::invalid_argument("need 2w < N");
  if (c < 2) throw std::invalid_argument("c must be >= 2");
  WitnessParams p{N, w, c, 0, 0};
  while ((p.d1 + 1) * (p.d1 + 1) * (p.d1 + 1) * c <= w) ++p.d1;
  while ((p.d2 + 1) * (p.d2 + 1) * c * w <= N) ++p.d2;
  return p;
}

SupportSet build_support(const WitnessParams& params) {
  SupportSet s;
  for (std::int64_t i = 1; i <= params.d1; ++i) s.t1.push_back(params.w / (params.c * i * i));
  for (std::int64_t i = 1; i <= params.d2; ++i) s.t2.push_back(params.c * i * i * params.w);
  std::sort(s.t1.begin(), s.t1.end());
  if (std::adjacent_find(s.t1.begin(), s.t1.end()) != s.t1.end())
    throw std::logic_error("T1 has colliding floors; d1 violates d1 < (w/c)^(1/3)");
  s.full = s.t1;
  s.full.insert(s.full.end(), s.t2.begin(), s.t2.end());
  s.full.push_back(params.w);
  s.full.push_back(2 * params.w);
  std::sort(s.full.begin(), s.full.end());
  s.full.erase(std::unique(s.full.begin(), s.full.end()), s.full.end());
  return s;
}

Rational DualWitness::ratio(std::int64_t l) const {
  auto it = ratios.find(l);
  return it == ratios.end() ? Rational(0) : it->second;
}

namespace {

BigInt product_of_gaps(const std::vector<std::int64_t>& T, std::int64_t r) {
  BigInt out = 1;
  for (std::int64_t j : T)
    if (j != r) out *= static_cast<unsigned long>(std::llabs(r - j));
  return out;
}

int phi_sign(const WitnessParams& p, const std::vector<std::int64_t>& T, std::int64_t l) {
  std::int64_t above_in_T = std::count_if(T.begin(), T.end(), [&](std::int64_t j) { return j > l; });
  std::int64_t excluded_above = (p.N - l) - above_in_T;
  return ((l + excluded_above) % 2 == 0) ? 1 : -1;
}

}  // namespace

DualWitness build_witness(const WitnessParams& params) {
  DualWitness wit;
  wit.params = params;
  wit.support = build_support(params);
  const auto& T = wit.support.full;
  wit.d2_effective = static_cast<std::int64_t>(T.size()) - 2 - params.d1;
  wit.D1 = params.d1;
  wit.D2 = wit.d2_effective;

  const BigInt at_w = product_of_gaps(T, params.w);
  const int flip = phi_sign(params, T, params.w);  // make Phi(w) > 0
  for (std::int64_t l : T) {
    Rational r(at_w, product_of_gaps(T, l));
    r.canonicalize();
    if (phi_sign(params, T, l) * flip < 0) r = -r;
    wit.ratios[l] = r;
  }
  for (const auto& [l, r] : wit.ratios) wit.norm_weight += abs(r) * pow(Rational(l), static_cast<unsigned>(wit.D1));
  return wit;
}

Rational direct_ratio(const WitnessParams& params, const SupportSet& support, std::int64_t l) {
  auto raw = [&](std::int64_t t) {
    Rational q = 1;
    for (std::int64_t i = 0; i <= params.N; ++i)
      if (!std::binary_search(support.full.begin(), support.full.end(), i)) q *= t - i;
    Rational v = Rational(binomial(static_cast<unsigned long>(params.N), static_cast<unsigned long>(t))) * q;
    return (t % 2 == 0) ? v : Rational(-v);
  };
  Rational at_w = raw(params.w);
  Rational out = raw(l) / abs(at_w);
  return at_w < 0 ? Rational(-out) : out;
}

std::vector<Rational> orthogonality_check(const DualWitness& wit, std::int64_t j_max) {
  std::vector<Rational> sums;
  for (std::int64_t j = 0; j <= j_max; ++j) {
    Rational s;
    for (const auto& [l, r] : wit.ratios) s += r * pow(Rational(l), static_cast<unsigned>(j));
    sums.push_back(s);
  }
  return sums;
}

Rational dual_objective(const DualWitness& wit) {
  const std::int64_t w = wit.params.w;
  const unsigned D1 = static_cast<unsigned>(wit.D1);
  Rational A = abs(wit.ratio(w)) * pow(Rational(w), D1);
  Rational B = abs(wit.ratio(2 * w)) * pow(Rational(2 * w), D1);
  Rational E;
  for (const auto& [l, r] : wit.ratios)
    if (l != w && l != 2 * w) E += abs(r) * pow(Rational(l), D1);
  return (A + B - E) / (A + B + E);
}

std::vector<RatioCheck> ratio_bound_check(const DualWitness& wit, const Rational& slack) {
  const auto& p = wit.params;
  std::vector<RatioCheck> out;
  for (std::int64_t i = 1; i <= p.d2; ++i) {
    RatioCheck rc;
    rc.which = "keyeq1";
    rc.i = i;
    rc.point = p.c * i * i * p.w;
    rc.lhs = abs(wit.ratio(rc.point));
    Rational ci2(p.c * i * i);
    if (ci2 <= 2) {
      rc.skipped = true;
    } else {
      rc.rhs = slack * 2 / ((1 - 1 / ci2) * (ci2 - 2) * pow(ci2, static_cast<unsigned>(p.d1)));
      rc.holds = rc.lhs <= rc.rhs;
    }
    out.push_back(rc);
  }
  for (std::int64_t i = 1; i <= p.d1; ++i) {
    RatioCheck rc;
    rc.which = "keyeq2";
    rc.i = i;
    rc.point = p.w / (p.c * i * i);
    rc.lhs = abs(wit.ratio(rc.point));
    Rational ci2(p.c * i * i);
    // d1 >= 1 here, so the exponent is nonnegative
    rc.rhs = 4 * pow(ci2, static_cast<unsigned>(p.d1 - 1));
    rc.holds = rc.lhs <= rc.rhs;
    out.push_back(rc);
  }
  return out;
}

ProductCheck appendix_product_check(std::int64_t w, std::int64_t c, std::int64_t i) {
  if (w < 1 || c < 2) throw std::invalid_argument("need w >= 1 and c >= 2");
  std::int64_t d1 = 0;
  while ((d1 + 1) * (d1 + 1) * (d1 + 1) * c <= w) ++d1;
  if (i < 1 || i > d1)
    throw std::invalid_argument("i = " + std::to_string(i) + " outside 1..d1 = " + std::to_string(d1));
  const Rational wq(w), ci2(c * i * i);
  Rational scale = pow(Rational(wq / ci2), static_cast<unsigned>(d1 - 1));
  Rational prod = 1;
  for (std::int64_t j = 1; j <= d1; ++j) {
    if (j == i) continue;
    Rational jj(j * j);
    prod *= (Rational(static_cast<long>(std::llabs(j - i) * (j + i))) - ci2 * jj / wq) / jj;
  }
  ProductCheck out{scale * prod, scale / 2, false};
  out.holds = out.lhs >= out.rhs;
  return out;
}

Rational key_identity_sum(const Poly& Q, std::int64_t N) {
  Rational s;
  for (std::int64_t l = 0; l <= N; ++l) {
    Rational term = Rational(binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(l))) * Q(Rational(l));
    s += (l % 2 == 0) ? term : Rational(-term);
  }
  return s;
}

std::vector<Rational> normalized_phi(const DualWitness& wit, const std::vector<std::int64_t>& points) {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (std::int64_t l : points) out.push_back(wit.ratio(l) / wit.norm_weight);
  return out;
}

FloatWitness build_witness_float(const WitnessParams& params) {
  SupportSet s = build_support(params);
  FloatWitness f;
  f.points = s.full;
  auto log_gaps = [&](std::int64_t r) {
    double acc = 0.0;
    for (std::int64_t j : s.full)
      if (j != r) acc += std::log(static_cast<double>(std::llabs(r - j)));
    return acc;
  };
  const double at_w = log_gaps(params.w);
  const int flip = phi_sign(params, s.full, params.w);
  const double d1 = static_cast<double>(params.d1);
  double A = 0.0, B = 0.0, E = 0.0;
  for (std::int64_t l : s.full) {
    f.signs.push_back(phi_sign(params, s.full, l) * flip);
    double lr = at_w - log_gaps(l);
    f.log_ratio.push_back(lr);
    // weights relative to A to stay in range
    double weight = std::exp(lr + d1 * (std::log(static_cast<double>(l)) - std::log(static_cast<double>(params.w))));
    if (l == params.w)
      A += weight;
    else if (l == 2 * params.w)
      B += weight;
    else
      E += weight;
  }
  f.objective = (A + B - E) / (A + B + E);
  return f;
}

}  // namespace apxcount
