#ifndef CRISP_LOADER_HPP
#define CRISP_LOADER_HPP

#include <string>
#include <vector>

#include "crisp/ast.hpp"
#include "crisp/diagnostics.hpp"

namespace crisp {

struct LoadedFile {
  std::string path;        // as resolved
  std::string module_name; // file stem
  std::string source;
  std::vector<RawDecl> decls;
  std::vector<std::string> imports; // module names, implicit prelude included
};

// Ordered by imports: every file appears once, after its import closure.
struct LoadPlan {
  std::vector<LoadedFile> files;
};

struct LoaderOptions {
  std::vector<std::string> search_paths; // tried after the importing file's dir
  bool no_prelude = false;
};

// Computes the import closure of the given root files, in topological order.
// Cycles and unresolvable imports throw a Diagnostic (E-IMPORT); lex/parse
// failures of any file in the closure throw a Diagnostic too.
LoadPlan load_modules(const std::vector<std::string>& root_files,
                      const LoaderOptions& opts);

} // namespace crisp

#endif
