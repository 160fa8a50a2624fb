#include "crisp/manifest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace crisp {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = line.find('\t', pos);
    if (next == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

} // namespace

std::vector<ManifestEntry> parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  std::vector<ManifestEntry> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() < 4)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": manifest entry needs at least 4 tab-separated fields");
    ManifestEntry e;
    e.file = cols[0];
    e.decl = cols[1];
    e.tag = cols[2];
    e.verdict = cols[3];
    if (e.verdict == "reject") {
      if (cols.size() < 5)
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": reject entry must name a diagnostic code");
      e.code = cols[4];
    } else if (e.verdict != "accept") {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": verdict must be 'accept' or 'reject'");
    }
    e.line = lineno;
    entries.push_back(std::move(e));
  }
  return entries;
}

ManifestReport run_manifest(const std::string& manifest_path, const Options& opts) {
  ManifestReport rep;
  rep.entries = parse_manifest(manifest_path);
  std::string dir = fs::path(manifest_path).parent_path().string();
  if (dir.empty()) dir = ".";

  Options file_opts = opts;
  file_opts.search_paths.push_back(dir);

  std::map<std::string, CheckResult> cache;
  auto check_file = [&](const std::string& rel) -> const CheckResult& {
    auto it = cache.find(rel);
    if (it != cache.end()) return it->second;
    std::string full = (fs::path(dir) / rel).lexically_normal().string();
    CheckResult r = run_check({full}, file_opts);
    return cache.emplace(rel, std::move(r)).first->second;
  };

  std::ostringstream out;
  std::set<std::string> mentioned;
  std::set<std::string> tagset;

  for (auto& e : rep.entries) {
    mentioned.insert(fs::path(e.file).lexically_normal().string());
    tagset.insert(e.tag);
    const CheckResult& r = check_file(e.file);
    bool pass = false;
    std::string why;

    if (e.verdict == "accept") {
      if (!r.ok()) {
        why = "file has diagnostics; first: " +
              std::string(diag_code_name(r.diagnostics[0].code)) + " in '" +
              r.diagnostics[0].decl + "'";
      } else {
        std::string full = (fs::path(dir) / e.file).lexically_normal().string();
        const SigEntry* se = r.sig.find(e.decl);
        if (!se) {
          why = "declaration '" + e.decl + "' not found";
        } else if (se->origin_file != full) {
          why = "declaration '" + e.decl + "' comes from " + se->origin_file;
        } else {
          pass = true;
        }
      }
    } else {
      if (r.ok()) {
        why = "file checked cleanly but a rejection was expected";
      } else {
        const Diagnostic& d = r.diagnostics[0];
        std::string code = diag_code_name(d.code);
        if (code != e.code) {
          why = "expected " + e.code + ", got " + code;
        } else if (e.decl != "-" && d.decl != e.decl) {
          why = "diagnostic attributed to '" + d.decl + "', expected '" + e.decl + "'";
        } else {
          pass = true;
        }
      }
    }

    if (pass) {
      rep.passed++;
      out << "PASS " << e.file << " " << e.decl << " [" << e.tag << "] " << e.verdict;
      if (!e.code.empty()) out << " " << e.code;
      out << "\n";
    } else {
      rep.failed++;
      out << "FAIL " << e.file << " " << e.decl << " [" << e.tag << "] " << e.verdict;
      if (!e.code.empty()) out << " " << e.code;
      out << ": " << why << "\n";
    }
  }

  // Every corpus file must appear in the manifest.
  std::vector<std::string> missing;
  std::error_code ec;
  for (auto it = fs::recursive_directory_iterator(dir, ec);
       it != fs::recursive_directory_iterator(); ++it) {
    if (!it->is_regular_file()) continue;
    if (it->path().extension() != ".ctt") continue;
    std::string rel = fs::relative(it->path(), dir).lexically_normal().string();
    if (!mentioned.count(rel)) missing.push_back(rel);
  }
  std::sort(missing.begin(), missing.end());
  for (auto& m : missing) {
    rep.failed++;
    out << "FAIL " << m << " - [-] coverage: corpus file missing from manifest\n";
  }

  rep.tags.assign(tagset.begin(), tagset.end());
  out << rep.passed << "/" << (rep.passed + rep.failed) << " entries passed\n";
  out << "tags:";
  for (auto& t : rep.tags) out << " " << t;
  out << "\n";
  rep.ok = rep.failed == 0;
  rep.text = out.str();
  return rep;
}

} // namespace crisp
