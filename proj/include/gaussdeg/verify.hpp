#pragma once

#include <string>
#include <vector>

namespace gaussdeg::verify {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // one line per failing tuple

  bool ok() const noexcept { return failed == 0; }
};

/// Sum identity for f^lambda, n = 1..max_n.
SuiteResult identity(int max_n);

/// Hook-length count against brute-force placement for every partition of
/// weight <= max_weight.
SuiteResult syt(int max_weight, int cap);

/// Every degree route against degree_main, n = 1..max_n, d = 2..max_d.
SuiteResult crossform(int max_n, int max_d);

/// Closed-form Veronese Schur values against Jacobi-Trudi determinants.
SuiteResult schur(int max_n, int max_d);

/// lower <= ratio <= upper, with equality throughout for curves.
SuiteResult bounds(int max_n, int max_d);

/// D((1^n)) <= D(lambda) <= D((n)) for n <= max_n, 2n <= N <= max_ambient.
SuiteResult lemma(int max_n, int max_ambient);

/// Generic-table mode against Veronese mode and the general-curve formula.
SuiteResult generic(int max_n, int max_d);

}  // namespace gaussdeg::verify
