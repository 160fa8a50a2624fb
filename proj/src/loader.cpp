#include "crisp/loader.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;

namespace crisp {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loader {
  const LoaderOptions& opts;
  std::vector<LoadedFile> ordered;
  std::map<std::string, int> state; // path -> 0 visiting, 1 done
  std::vector<std::string> stack;   // module names, for cycle reports

  [[noreturn]] void import_error(const std::string& msg, const std::string& file,
                                 Span span = {}) {
    Diagnostic d;
    d.code = DiagCode::Import;
    d.message = msg;
    d.file = file;
    d.span = span;
    d.decl = "-";
    throw d;
  }

  std::string resolve(const std::string& name, const std::string& from_dir,
                      const std::string& from_file, Span span) {
    std::vector<std::string> tried;
    auto probe = [&](const fs::path& dir) -> std::string {
      fs::path p = dir / (name + ".ctt");
      tried.push_back(p.string());
      std::error_code ec;
      if (fs::exists(p, ec)) return p.lexically_normal().string();
      return "";
    };
    if (!from_dir.empty()) {
      std::string r = probe(from_dir);
      if (!r.empty()) return r;
    }
    for (auto& d : opts.search_paths) {
      std::string r = probe(d);
      if (!r.empty()) return r;
    }
    std::string msg = "cannot resolve import '" + name + "'; tried:";
    for (auto& t : tried) msg += " " + t;
    import_error(msg, from_file, span);
  }

  void visit(const std::string& path, const std::string& requested_by, Span span) {
    std::string key = fs::path(path).lexically_normal().string();
    auto it = state.find(key);
    if (it != state.end()) {
      if (it->second == 1) return;
      std::string cycle;
      std::string name = fs::path(path).stem().string();
      bool in_cycle = false;
      for (auto& m : stack) {
        if (m == name) in_cycle = true;
        if (in_cycle) cycle += m + " -> ";
      }
      cycle += name;
      import_error("import cycle: " + cycle, requested_by, span);
    }
    state[key] = 0;

    LoadedFile f;
    f.path = key;
    f.module_name = fs::path(path).stem().string();
    std::error_code ec;
    if (!fs::exists(path, ec))
      import_error("file not found: " + path, requested_by, span);
    try {
      f.source = read_file(path);
    } catch (const std::exception& e) {
      import_error(e.what(), requested_by, span);
    }
    try {
      f.decls = parse_module(tokenize(f.source));
    } catch (const CheckError& e) {
      Diagnostic d;
      d.code = e.code;
      d.message = e.message;
      d.file = key;
      d.span = e.span;
      d.decl = "-";
      throw d;
    }

    std::vector<std::pair<std::string, Span>> imports;
    if (!opts.no_prelude && f.module_name != "prelude")
      imports.emplace_back("prelude", Span{});
    for (auto& d : f.decls)
      if (d.kind == DeclKind::Import) imports.emplace_back(d.name, d.span);

    stack.push_back(f.module_name);
    std::string dir = fs::path(key).parent_path().string();
    for (auto& [name, sp] : imports) {
      f.imports.push_back(name);
      std::string resolved = resolve(name, dir, key, sp);
      visit(resolved, key, sp);
    }
    stack.pop_back();

    state[key] = 1;
    ordered.push_back(std::move(f));
  }
};

} // namespace

LoadPlan load_modules(const std::vector<std::string>& root_files,
                      const LoaderOptions& opts) {
  Loader l{opts, {}, {}, {}};
  for (auto& f : root_files) l.visit(f, f, Span{});
  return LoadPlan{std::move(l.ordered)};
}

} // namespace crisp
