// One line per acceptance criterion; exit status is the number of failures.
#include "apxcount/acceptance/acceptance.hpp"

#include <iostream>

int main() {
  apxcount::AcceptanceOptions opts;
  std::size_t failed = 0;
  apxcount::run_acceptance(opts, [&](const apxcount::CriterionResult& r) {
    std::cout << apxcount::format_line(r) << std::endl;
    failed += !r.pass;
  });
  return static_cast<int>(failed);
}
