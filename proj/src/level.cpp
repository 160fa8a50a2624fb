#include "crisp/level.hpp"

#include <algorithm>

#include "crisp/diagnostics.hpp"

namespace crisp {

namespace {

void renormalize_constant(LevelExpr& e) {
  if (e.atoms.empty()) return;
  unsigned max_off = 0;
  for (auto& [v, k] : e.atoms) max_off = std::max(max_off, k);
  if (e.constant <= max_off) e.constant = 0;
}

} // namespace

LevelExpr LevelExpr::make_const(unsigned c) {
  LevelExpr e;
  e.constant = c;
  return e;
}

LevelExpr LevelExpr::make_var(uint32_t v) {
  LevelExpr e;
  e.atoms.emplace_back(v, 0u);
  return e;
}

uint32_t LevelExpr::var_bound() const {
  uint32_t b = 0;
  for (auto& [v, k] : atoms) b = std::max(b, v + 1);
  return b;
}

unsigned LevelExpr::eval(const std::vector<unsigned>& assignment) const {
  unsigned r = constant;
  for (auto& [v, k] : atoms) {
    unsigned val = (v < assignment.size() ? assignment[v] : 0u) + k;
    r = std::max(r, val);
  }
  return r;
}

LevelExpr level_shift(const LevelExpr& e, unsigned offset) {
  if (offset == 0) return e;
  LevelExpr r = e;
  // max(c, v+k) + o == max(c+o, v+k+o); domination is preserved except when
  // the constant was implicit 0 under nonempty atoms.
  if (r.atoms.empty() || r.constant > 0) {
    r.constant += offset;
  }
  for (auto& [v, k] : r.atoms) k += offset;
  renormalize_constant(r);
  return r;
}

LevelExpr level_suc(const LevelExpr& e) { return level_shift(e, 1); }

LevelExpr level_max(const LevelExpr& a, const LevelExpr& b) {
  LevelExpr r;
  r.constant = std::max(a.constant, b.constant);
  r.atoms = a.atoms;
  for (auto& [v, k] : b.atoms) {
    auto it = std::find_if(r.atoms.begin(), r.atoms.end(),
                           [&](auto& p) { return p.first == v; });
    if (it == r.atoms.end()) {
      r.atoms.emplace_back(v, k);
    } else {
      it->second = std::max(it->second, k);
    }
  }
  std::sort(r.atoms.begin(), r.atoms.end());
  renormalize_constant(r);
  return r;
}

LevelExpr level_instantiate(const LevelExpr& e, const std::vector<LevelExpr>& args) {
  LevelExpr r = LevelExpr::make_const(e.constant);
  for (auto& [v, k] : e.atoms) {
    if (v >= args.size())
      throw InternalError("level variable out of range in instantiation");
    r = level_max(r, level_shift(args[v], k));
  }
  return r;
}

std::string LevelExpr::to_string(const std::vector<std::string>& var_names) const {
  auto var_name = [&](uint32_t v) -> std::string {
    if (v < var_names.size()) return var_names[v];
    return "l" + std::to_string(v);
  };
  auto atom_str = [&](const std::pair<uint32_t, unsigned>& a) {
    std::string s = var_name(a.first);
    for (unsigned i = 0; i < a.second; i++) s = "lsuc (" + s + ")";
    return s;
  };
  std::string const_str = "lzero";
  {
    std::string s = "lzero";
    for (unsigned i = 0; i < constant; i++) s = "lsuc (" + s + ")";
    const_str = s;
  }
  if (atoms.empty()) return const_str;
  std::string acc;
  bool with_const = constant > 0;
  std::vector<std::string> parts;
  if (with_const) parts.push_back(const_str);
  for (auto& a : atoms) parts.push_back(atom_str(a));
  acc = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) {
    acc = "lmax (" + parts[i] + ") (" + acc + ")";
  }
  return acc;
}

const char* diag_code_name(DiagCode c) {
  switch (c) {
    case DiagCode::Lex: return "E-LEX";
    case DiagCode::Parse: return "E-PARSE";
    case DiagCode::Scope: return "E-SCOPE";
    case DiagCode::Conv: return "E-CONV";
    case DiagCode::Univ: return "E-UNIV";
    case DiagCode::CrispVar: return "E-CRISP-VAR";
    case DiagCode::Duplicate: return "E-DUPLICATE";
    case DiagCode::Import: return "E-IMPORT";
  }
  return "E-UNKNOWN";
}

} // namespace crisp
