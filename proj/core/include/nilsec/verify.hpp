#pragma once

#include <string>
#include <vector>

#include "nilsec/lie_type.hpp"

namespace nilsec {

struct CheckResult {
  std::string suite;
  std::string algebra;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// dims, identities, richardson, parity, ranks, iso, table1.
const std::vector<std::string>& suite_names();

/// The algebras checked when no type is given: sl4..sl9, sp4..sp16, so7..so17 and the exceptional ones.
std::vector<LieType> default_verify_types();

/// Runs one suite on one algebra. Suites that do not apply return no checks.
/// Never throws for verification failures; they become failed checks.
std::vector<CheckResult> run_suite(const std::string& suite, const LieType& type);

}  // namespace nilsec
