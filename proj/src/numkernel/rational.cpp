#include "apxcount/numkernel/rational.hpp"

#include <stdexcept>

namespace apxcount {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument& e) {
    if (std::string_view(e.what()).starts_with("zero denominator")) throw;
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  return r;  // already canonical: gcd(num^e, den^e) = 1
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

int sign(const Rational& r) { return sgn(r); }

double to_double(const Rational& r) { return r.get_d(); }

HighPrecision to_high_precision(const Rational& r) {
  return HighPrecision(r.get_num().get_str()) / HighPrecision(r.get_den().get_str());
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::int64_t integer_root(std::int64_t n, unsigned k) {
  if (n < 0) throw std::domain_error("integer_root of a negative number");
  BigInt out;
  mpz_root(out.get_mpz_t(), BigInt(static_cast<long>(n)).get_mpz_t(), k);
  return out.get_si();
}

Rational sqrt_approx(const Rational& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of a negative rational");
  if (mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t())) {
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    return Rational(n, d);
  }
  // floor(sqrt(x * 4^bits)) / 2^bits
  BigInt scale = BigInt(1) << (2 * bits);
  BigInt scaled = (x.get_num() * scale) / x.get_den();
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return make_rational(root, BigInt(1) << bits);
}

}  // namespace apxcount
