#ifndef CRISP_MANIFEST_HPP
#define CRISP_MANIFEST_HPP

#include <string>
#include <vector>

#include "crisp/driver.hpp"

namespace crisp {

// One line of the manifest: file, declaration ("-" for file-level), source
// reference tag, expected verdict ("accept" | "reject"), diagnostic code for
// rejects.
struct ManifestEntry {
  std::string file;
  std::string decl;
  std::string tag;
  std::string verdict;
  std::string code;
  size_t line = 0;
};

struct ManifestReport {
  bool ok = false;
  int passed = 0;
  int failed = 0;
  std::string text; // per-entry pass/fail lines + summary
  std::vector<std::string> tags;
  std::vector<ManifestEntry> entries;
};

std::vector<ManifestEntry> parse_manifest(const std::string& path);

// Runs every entry: each distinct file is checked once (fresh signature,
// own import closure, the manifest's directory on the search path) and the
// verdicts are compared. Also audits that every .ctt file under the
// manifest's directory appears in some entry.
ManifestReport run_manifest(const std::string& manifest_path, const Options& opts);

} // namespace crisp

#endif
