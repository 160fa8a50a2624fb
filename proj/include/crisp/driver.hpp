#ifndef CRISP_DRIVER_HPP
#define CRISP_DRIVER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "crisp/loader.hpp"
#include "crisp/signature.hpp"

namespace crisp {

struct Options {
  bool json = false;
  bool no_prelude = false;
  bool verbose = false;
  bool timings = false;
  std::vector<std::string> search_paths;
};

struct DeclOutcome {
  std::string file;
  std::string name;
  enum Status { Checked, Failed, Skipped } status;
};

struct CheckResult {
  std::vector<Diagnostic> diagnostics;
  std::vector<DeclOutcome> outcomes;
  Signature sig;
  std::vector<std::string> order; // file paths, import order
  bool ok() const { return diagnostics.empty(); }
};

// Loads the import closure of `files` and checks every declaration.
// Checking stops at the first error per declaration but continues with the
// rest; declarations depending on a failed one are marked skipped.
CheckResult run_check(const std::vector<std::string>& files, const Options& opts);

// Full CLI: `crispcheck check <files...>` / `crispcheck manifest <file>`.
// Returns the process exit code: 0 all checked, 1 any diagnostic, 2 usage/IO.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

void print_diagnostics(const CheckResult& r, const Options& opts, std::ostream& err);

} // namespace crisp

#endif
