#include "report.hpp"

#include <sstream>

namespace apxcount::report {

json exact(const Rational& r) { return to_string(r); }

json exact_with_float(const Rational& r) { return json{{"exact", to_string(r)}, {"float", to_double(r)}}; }

json poly(const Poly& p) {
  json out = json::array();
  for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

json laurent(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
  return json{{"min_exp", p.min_exp()}, {"coefficients", coeffs}};
}

json bivar(const BivarPoly& p) {
  json rows = json::array();
  for (const auto& row : p.rows()) {
    json r = json::array();
    for (const Rational& c : row) r.push_back(to_string(c));
    rows.push_back(r);
  }
  return rows;
}

json interval(const IntervalBound& b) {
  return json{{"lo", to_string(b.lo)},
              {"hi", to_string(b.hi)},
              {"certified", b.certified},
              {"lo_float", to_double(b.lo)},
              {"hi_float", to_double(b.hi)}};
}

json high_precision(const HighPrecision& x) { return x.str(30, std::ios_base::scientific); }

std::string to_json_text(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << csv_field(prefix) << ",\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out << csv_field(prefix) << "," << csv_field(j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string to_csv(const json& j) {
  std::ostringstream out;
  out << "key,value\n";
  flatten(j, "", out);
  return out.str();
}

}  // namespace apxcount::report
