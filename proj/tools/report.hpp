#pragma once

#include "apxcount/numkernel/bivar.hpp"
#include "apxcount/numkernel/bounds.hpp"
#include "apxcount/numkernel/laurent.hpp"
#include "apxcount/numkernel/poly.hpp"

#include <json.hpp>

#include <string>

namespace apxcount::report {

using json = nlohmann::ordered_json;

// Exact values leave as "num/den"; *_float siblings are mirrors only.
json exact(const Rational& r);
json exact_with_float(const Rational& r);
json poly(const Poly& p);
json laurent(const LaurentPoly& p);  // {"min_exp", "coefficients"}
json bivar(const BivarPoly& p);      // rows[i][j] = coefficient of x^i y^j
json interval(const IntervalBound& b);
json high_precision(const HighPrecision& x);  // decimal string, 30 digits

std::string to_json_text(const json& j);
// key,value rows; nested keys joined with '.', array items indexed.
std::string to_csv(const json& j);

}  // namespace apxcount::report
