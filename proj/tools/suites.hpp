// Named verification suites driven by the command line.
#pragma once

#include <string>
#include <vector>

#include "diagred/report.hpp"
#include "diagred/weyl.hpp"

namespace diagred::cli {

struct SuiteOptions {
  int n = 2;
  int copies = 1;  // N: copies of the Weyl generators
  Statistics stats = Statistics::bosonic;
  int power = 2;   // largest power in the central suite
  CrossConstant cross = CrossConstant::kronecker;
  FermionConstant fermion = FermionConstant::anticommuting;
};

/// One suite together with the configuration it actually ran on.
struct SuiteRun {
  std::string module;
  Report report;
  int n = 0;
  int copies = 1;
  Statistics stats = Statistics::bosonic;
  double seconds = 0;
};

/// Suite names of a module, in run order.
std::vector<std::string> suite_names(const std::string& module);

/// Runs one suite, or all suites of the module when `suite` is empty.
/// `module` may be "all". Throws std::invalid_argument on an unknown
/// suite or a configuration the suite does not accept.
std::vector<SuiteRun> run_suites(const std::string& module, const std::string& suite, const SuiteOptions& options);

}  // namespace diagred::cli
