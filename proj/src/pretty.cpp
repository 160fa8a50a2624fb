#include "crisp/pretty.hpp"

#include <algorithm>

#include "crisp/diagnostics.hpp"

namespace crisp {

namespace {

// Precedence levels: 0 term (lambda/arrow), 1 product, 2 application, 3 atom.

std::string wrap(bool cond, const std::string& s) {
  return cond ? "(" + s + ")" : s;
}

std::string print_raw(const RawTerm& t, int prec);

std::string raw_atom(const RawTerm& t) { return print_raw(t, 3); }

std::string print_raw(const RawTerm& t, int prec) {
  switch (t.kind) {
    case RawKind::Var:
      return t.name;
    case RawKind::Universe:
      if (t.universe_literal) return "Set" + std::to_string(t.universe_level);
      return wrap(prec > 2, "Set " + raw_atom(t.kids[0]));
    case RawKind::LZero:
      return "lzero";
    case RawKind::LSuc:
      return wrap(prec > 2, "lsuc " + raw_atom(t.kids[0]));
    case RawKind::LMax:
      return wrap(prec > 2, "lmax " + raw_atom(t.kids[0]) + " " + raw_atom(t.kids[1]));
    case RawKind::Pi: {
      std::string cod = print_raw(t.kids[1], 0);
      std::string s;
      if (t.name == "_" && t.modality == Modality::Ordinary) {
        s = print_raw(t.kids[0], 1) + " -> " + cod;
      } else {
        const char* sep = t.modality == Modality::Crisp ? " :: " : " : ";
        s = "(" + t.name + sep + print_raw(t.kids[0], 0) + ") -> " + cod;
      }
      return wrap(prec > 0, s);
    }
    case RawKind::Sigma: {
      std::string rest = print_raw(t.kids[1], 1);
      std::string s;
      if (t.name == "_") {
        s = print_raw(t.kids[0], 2) + " * " + rest;
      } else {
        s = "(" + t.name + " : " + print_raw(t.kids[0], 0) + ") * " + rest;
      }
      return wrap(prec > 1, s);
    }
    case RawKind::Lam:
      return wrap(prec > 0, "\\" + t.name + ". " + print_raw(t.kids[0], 0));
    case RawKind::App:
      return wrap(prec > 2, print_raw(t.kids[0], 2) + " " + raw_atom(t.kids[1]));
    case RawKind::Pair:
      return "(" + print_raw(t.kids[0], 0) + " , " + print_raw(t.kids[1], 0) + ")";
    case RawKind::Fst:
      return wrap(prec > 2, "fst " + raw_atom(t.kids[0]));
    case RawKind::Snd:
      return wrap(prec > 2, "snd " + raw_atom(t.kids[0]));
    case RawKind::Eq:
      return wrap(prec > 2, "Eq " + raw_atom(t.kids[0]) + " " + raw_atom(t.kids[1]) +
                                " " + raw_atom(t.kids[2]));
    case RawKind::Refl:
      return "refl";
    case RawKind::J:
    case RawKind::Jc: {
      std::string s = t.kind == RawKind::J ? "J" : "Jc";
      for (auto& k : t.kids) s += " " + raw_atom(k);
      return wrap(prec > 2, s);
    }
    case RawKind::UnitType:
      return "Unit";
    case RawKind::UnitVal:
      return "tt";
    case RawKind::EmptyType:
      return "Empty";
    case RawKind::EmptyElim:
      return wrap(prec > 2, "absurd " + raw_atom(t.kids[0]) + " " + raw_atom(t.kids[1]));
    case RawKind::Annotation:
      return "(" + print_raw(t.kids[0], 0) + " : " + print_raw(t.kids[1], 0) + ")";
  }
  throw InternalError("print_raw: bad kind");
}

std::string level_atom(const LevelExpr& l, const std::vector<std::string>& lvl_names) {
  std::string s = l.to_string(lvl_names);
  bool simple = s.find(' ') == std::string::npos;
  return simple ? s : "(" + s + ")";
}

struct CorePrinter {
  std::vector<std::string> names; // telescope, innermost last
  const std::vector<std::string>& lvl_names;

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    std::string n = base;
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
    return n;
  }

  std::string atom(const CoreTerm& t) { return print(t, 3); }

  std::string binder_body(const std::string& n, const CoreTerm& body, int prec) {
    names.push_back(n);
    std::string s = print(body, prec);
    names.pop_back();
    return s;
  }

  std::string print(const CoreTerm& t, int prec) {
    switch (t.kind) {
      case TermKind::Var: {
        size_t i = names.size();
        if (t.index >= 0 && (size_t)t.index < i) return names[i - 1 - t.index];
        return "#" + std::to_string(t.index);
      }
      case TermKind::Universe: {
        if (t.level.is_constant() && t.level.constant <= 9)
          return "Set" + std::to_string(t.level.constant);
        return wrap(prec > 2, "Set " + level_atom(t.level, lvl_names));
      }
      case TermKind::UniverseAny:
        return "Set _";
      case TermKind::Pi: {
        std::string n = t.name == "_" ? "_" : fresh(t.name);
        std::string s;
        if (n == "_" && t.modality == Modality::Ordinary) {
          s = print(*t.kids[0], 1) + " -> " + binder_body(n, *t.kids[1], 0);
        } else {
          const char* sep = t.modality == Modality::Crisp ? " :: " : " : ";
          s = "(" + n + sep + print(*t.kids[0], 0) + ") -> " +
              binder_body(n, *t.kids[1], 0);
        }
        return wrap(prec > 0, s);
      }
      case TermKind::Sigma: {
        std::string n = t.name == "_" ? "_" : fresh(t.name);
        std::string s;
        if (n == "_") {
          s = print(*t.kids[0], 2) + " * " + binder_body(n, *t.kids[1], 1);
        } else {
          s = "(" + n + " : " + print(*t.kids[0], 0) + ") * " +
              binder_body(n, *t.kids[1], 1);
        }
        return wrap(prec > 1, s);
      }
      case TermKind::Lam: {
        std::string n = fresh(t.name);
        return wrap(prec > 0, "\\" + n + ". " + binder_body(n, *t.kids[0], 0));
      }
      case TermKind::App:
        return wrap(prec > 2, print(*t.kids[0], 2) + " " + atom(*t.kids[1]));
      case TermKind::Pair:
        return "(" + print(*t.kids[0], 0) + " , " + print(*t.kids[1], 0) + ")";
      case TermKind::Fst:
        return wrap(prec > 2, "fst " + atom(*t.kids[0]));
      case TermKind::Snd:
        return wrap(prec > 2, "snd " + atom(*t.kids[0]));
      case TermKind::Eq:
        return wrap(prec > 2, "Eq " + atom(*t.kids[0]) + " " + atom(*t.kids[1]) +
                                  " " + atom(*t.kids[2]));
      case TermKind::Refl:
        return "refl";
      case TermKind::J:
      case TermKind::Jc: {
        std::string s = t.kind == TermKind::J ? "J" : "Jc";
        for (auto& k : t.kids) s += " " + atom(*k);
        return wrap(prec > 2, s);
      }
      case TermKind::Unit:
        return "Unit";
      case TermKind::TT:
        return "tt";
      case TermKind::Empty:
        return "Empty";
      case TermKind::Absurd:
        return wrap(prec > 2, "absurd " + atom(*t.kids[0]) + " " + atom(*t.kids[1]));
      case TermKind::Const: {
        std::string s = t.name;
        for (auto& l : t.levels) s += " " + level_atom(l, lvl_names);
        return t.levels.empty() ? s : wrap(prec > 2, s);
      }
    }
    throw InternalError("print_core: bad kind");
  }
};

} // namespace

std::string pretty(const RawTerm& t) { return print_raw(t, 0); }

std::string pretty_core(const CoreTerm& t, std::vector<std::string> names,
                        const std::vector<std::string>& level_names) {
  CorePrinter p{std::move(names), level_names};
  return p.print(t, 0);
}

} // namespace crisp
