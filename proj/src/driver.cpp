#include "crisp/driver.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "crisp/core_check.hpp"
#include "crisp/elaborate.hpp"
#include "crisp/eval.hpp"
#include "crisp/manifest.hpp"

namespace crisp {

namespace {

std::vector<std::string> env_search_paths() {
  std::vector<std::string> out;
  const char* v = std::getenv("CRISPCHECK_PATH");
  if (!v) return out;
  std::string s = v;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(':', pos);
    if (next == std::string::npos) next = s.size();
    if (next > pos) out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

} // namespace

CheckResult run_check(const std::vector<std::string>& files, const Options& opts) {
  CheckResult result;
  LoaderOptions lopts;
  lopts.search_paths = opts.search_paths;
  for (auto& p : env_search_paths()) lopts.search_paths.push_back(p);
  lopts.no_prelude = opts.no_prelude;

  LoadPlan plan;
  try {
    plan = load_modules(files, lopts);
  } catch (const Diagnostic& d) {
    result.diagnostics.push_back(d);
    return result;
  }

  Eval ev(result.sig);
  std::set<std::string> poisoned;

  for (auto& f : plan.files) {
    result.order.push_back(f.path);
    for (auto& d : f.decls) {
      if (d.kind == DeclKind::Import) continue;
      try {
        check_declaration(result.sig, ev, d, f.path, &poisoned);
        result.outcomes.push_back({f.path, d.name, DeclOutcome::Checked});
      } catch (const CheckError& e) {
        Diagnostic diag;
        diag.code = e.code;
        diag.message = e.message;
        diag.file = f.path;
        diag.span = e.span;
        diag.decl = d.name;
        diag.context = e.context;
        result.diagnostics.push_back(std::move(diag));
        result.outcomes.push_back({f.path, d.name, DeclOutcome::Failed});
        poisoned.insert(d.name);
      } catch (const SkippedDependency& s) {
        result.outcomes.push_back({f.path, d.name, DeclOutcome::Skipped});
        poisoned.insert(d.name);
      }
    }
  }
  return result;
}

void print_diagnostics(const CheckResult& r, const Options& opts, std::ostream& err) {
  for (auto& d : r.diagnostics) {
    if (opts.json) {
      nlohmann::json j;
      j["code"] = diag_code_name(d.code);
      j["file"] = d.file;
      j["start"] = d.span.begin;
      j["end"] = d.span.end;
      j["message"] = d.message;
      err << j.dump() << "\n";
    } else {
      err << d.file << ":" << d.span.begin << "-" << d.span.end << ": error["
          << diag_code_name(d.code) << "]";
      if (d.decl != "-") err << " in '" << d.decl << "'";
      err << ": " << d.message << "\n";
      if (!d.context.empty()) err << "  context: " << d.context << "\n";
    }
  }
}

namespace {

int cmd_check(const std::vector<std::string>& files, const Options& opts,
              std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r = run_check(files, opts);
  int checked = 0, failed = 0, skipped = 0;
  for (auto& o : r.outcomes) {
    switch (o.status) {
      case DeclOutcome::Checked: checked++; break;
      case DeclOutcome::Failed: failed++; break;
      case DeclOutcome::Skipped: skipped++; break;
    }
    if (opts.verbose) {
      const char* s = o.status == DeclOutcome::Checked ? "ok"
                      : o.status == DeclOutcome::Failed ? "FAILED"
                                                        : "skipped";
      out << "  " << o.name << " : " << s << "\n";
    }
  }
  for (auto& f : r.order) out << "checked " << f << "\n";
  out << checked << " declaration(s) checked, " << skipped << " skipped, "
      << r.diagnostics.size() << " error(s)\n";
  if (opts.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    out << "total time: " << ms << " ms\n";
  }
  print_diagnostics(r, opts, err);
  return r.ok() ? 0 : 1;
}

int usage(std::ostream& err) {
  err << "usage: crispcheck check [--json] [--no-prelude] [--verbose] [--timings]"
         " [--path <dir>]... <file.ctt>...\n"
         "       crispcheck manifest [same flags] <manifest.tsv>\n";
  return 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  if (args.empty()) return usage(err);
  std::string verb = args[0];
  Options opts;
  std::vector<std::string> positional;
  for (size_t i = 1; i < args.size(); i++) {
    const std::string& a = args[i];
    if (a == "--json") opts.json = true;
    else if (a == "--no-prelude") opts.no_prelude = true;
    else if (a == "--verbose") opts.verbose = true;
    else if (a == "--timings") opts.timings = true;
    else if (a == "--path") {
      if (i + 1 >= args.size()) return usage(err);
      opts.search_paths.push_back(args[++i]);
    } else if (!a.empty() && a[0] == '-') {
      err << "unknown flag: " << a << "\n";
      return usage(err);
    } else {
      positional.push_back(a);
    }
  }
  try {
    if (verb == "check") {
      if (positional.empty()) return usage(err);
      return cmd_check(positional, opts, out, err);
    }
    if (verb == "manifest") {
      if (positional.size() != 1) return usage(err);
      ManifestReport rep = run_manifest(positional[0], opts);
      out << rep.text;
      return rep.ok ? 0 : 1;
    }
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return usage(err);
}

} // namespace crisp
