#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgan {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // empty on pass
};

struct ValidationOptions {
  /// Test hook: feed the Hermiticity check a deliberately corrupted matrix.
  bool inject_non_hermitian = false;
};

/** The full invariant suite plus the two oracles (Taylor exponential,
 *  grid-search discriminator). Deterministic: repeated invocations produce
 *  identical results. */
std::vector<CheckResult> run_validation_suite(const ValidationOptions& options = {});

/** Prints one pass/fail line per check. Returns 0 iff all checks pass,
 *  2 otherwise. */
int validate(std::ostream& out, const ValidationOptions& options = {});

}  // namespace qgan
