#pragma once

#include "apxcount/boolsym/multilinear.hpp"
#include "apxcount/numkernel/laurent.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace apxcount {

/// Runs one command line (without the program name). The report goes to
/// --out or `out`; parse and validation failures print a JSON error object
/// to `out` and return nonzero.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "2*x1*x2 + x2*x3 - 1/3*x4": variables x1..xn (1-based). With
/// two_oracle_block = N > 0, y1..yN denote variables N..2N-1 and x1..xN the first block.
MultilinearPoly parse_multilinear(const std::string& text, unsigned n_vars = 0, unsigned two_oracle_block = 0);

/// "1/2 + 3/100*k - 2*k^-1"
LaurentPoly parse_laurent(const std::string& text);

}  // namespace apxcount
