#include "apxcount/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace apxcount {
namespace {

// Splits "a+b-c" into signed terms; '-' right after '^' belongs to an exponent.
std::vector<std::pair<int, std::string>> signed_terms(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<std::pair<int, std::string>> out;
  int sign = 1;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool splitter = (ch == '+' || ch == '-') && !(i > 0 && s[i - 1] == '^');
    if (splitter) {
      if (!cur.empty()) out.emplace_back(sign, cur);
      else if (i > 0) throw std::invalid_argument("dangling sign in '" + raw + "'");
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else {
      cur += ch;
    }
  }
  if (cur.empty()) throw std::invalid_argument("polynomial ends with a sign");
  out.emplace_back(sign, cur);
  return out;
}

std::vector<std::string> factors(const std::string& term) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t star = term.find('*', start);
    std::string f = term.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (f.empty()) throw std::invalid_argument("empty factor in '" + term + "'");
    out.push_back(f);
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return out;
}

unsigned variable_index(const std::string& f) {
  if (f.size() < 2 || !std::all_of(f.begin() + 1, f.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("bad variable '" + f + "'");
  unsigned i = static_cast<unsigned>(std::stoul(f.substr(1)));
  if (i == 0) throw std::invalid_argument("variables are 1-based: '" + f + "'");
  return i;
}

}  // namespace

MultilinearPoly parse_multilinear(const std::string& text, unsigned n_vars, unsigned two_oracle_block) {
  std::vector<std::pair<Rational, std::uint32_t>> terms;
  unsigned highest = 0;
  for (const auto& [sign, term] : signed_terms(text)) {
    Rational c = sign;
    std::uint32_t mask = 0;
    for (const std::string& f : factors(term)) {
      if (f[0] == 'x' || f[0] == 'y') {
        unsigned i = variable_index(f);
        unsigned bit = i - 1;
        if (f[0] == 'y') {
          if (two_oracle_block == 0) throw std::invalid_argument("y variables need the two-oracle block size");
          if (i > two_oracle_block) throw std::invalid_argument("'" + f + "' exceeds the block size");
          bit += two_oracle_block;
        } else if (two_oracle_block > 0 && i > two_oracle_block) {
          throw std::invalid_argument("'" + f + "' exceeds the block size");
        }
        if (bit >= MultilinearPoly::max_vars) throw std::invalid_argument("too many variables");
        mask |= 1U << bit;  // x^2 = x on Boolean inputs
        highest = std::max(highest, bit + 1);
      } else {
        c *= parse_rational(f);
      }
    }
    terms.emplace_back(c, mask);
  }
  if (two_oracle_block > 0) n_vars = 2 * two_oracle_block;
  if (n_vars == 0) n_vars = std::max(highest, 1U);
  if (highest > n_vars) throw std::invalid_argument("polynomial uses more than n = " + std::to_string(n_vars) + " variables");
  MultilinearPoly p(n_vars);
  for (const auto& [c, mask] : terms) p.add_term(mask, c);
  return p;
}

LaurentPoly parse_laurent(const std::string& text) {
  LaurentPoly out;
  for (const auto& [sign, term] : signed_terms(text)) {
    Rational c = sign;
    std::int64_t e = 0;
    for (const std::string& f : factors(term)) {
      if (f == "k") {
        e += 1;
      } else if (f.rfind("k^", 0) == 0) {
        e += std::stoll(f.substr(2));
      } else {
        c *= parse_rational(f);
      }
    }
    out = out + LaurentPoly::monomial(c, e);
  }
  return out;
}

}  // namespace apxcount
