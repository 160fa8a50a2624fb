#include "crisp/term.hpp"

#include "crisp/diagnostics.hpp"

namespace crisp {

namespace {
TermPtr node(CoreTerm&& t) { return std::make_shared<CoreTerm>(std::move(t)); }
} // namespace

TermPtr mk_var(int index, std::string hint) {
  CoreTerm t{TermKind::Var};
  t.index = index;
  t.name = std::move(hint);
  return node(std::move(t));
}
TermPtr mk_universe(LevelExpr l) {
  CoreTerm t{TermKind::Universe};
  t.level = std::move(l);
  return node(std::move(t));
}
TermPtr mk_universe_any() { return node(CoreTerm{TermKind::UniverseAny}); }
TermPtr mk_pi(Modality m, std::string hint, TermPtr dom, TermPtr cod) {
  CoreTerm t{TermKind::Pi};
  t.modality = m;
  t.name = std::move(hint);
  t.kids = {std::move(dom), std::move(cod)};
  return node(std::move(t));
}
TermPtr mk_lam(std::string hint, TermPtr body) {
  CoreTerm t{TermKind::Lam};
  t.name = std::move(hint);
  t.kids = {std::move(body)};
  return node(std::move(t));
}
TermPtr mk_app(TermPtr f, TermPtr a) {
  CoreTerm t{TermKind::App};
  t.kids = {std::move(f), std::move(a)};
  return node(std::move(t));
}
TermPtr mk_sigma(std::string hint, TermPtr dom, TermPtr cod) {
  CoreTerm t{TermKind::Sigma};
  t.name = std::move(hint);
  t.kids = {std::move(dom), std::move(cod)};
  return node(std::move(t));
}
TermPtr mk_pair(TermPtr a, TermPtr b) {
  CoreTerm t{TermKind::Pair};
  t.kids = {std::move(a), std::move(b)};
  return node(std::move(t));
}
TermPtr mk_fst(TermPtr x) {
  CoreTerm t{TermKind::Fst};
  t.kids = {std::move(x)};
  return node(std::move(t));
}
TermPtr mk_snd(TermPtr x) {
  CoreTerm t{TermKind::Snd};
  t.kids = {std::move(x)};
  return node(std::move(t));
}
TermPtr mk_eq(TermPtr A, TermPtr l, TermPtr r) {
  CoreTerm t{TermKind::Eq};
  t.kids = {std::move(A), std::move(l), std::move(r)};
  return node(std::move(t));
}
TermPtr mk_refl() { return node(CoreTerm{TermKind::Refl}); }
TermPtr mk_j(bool crisp, TermPtr A, TermPtr x, TermPtr C, TermPtr z, TermPtr y, TermPtr p) {
  CoreTerm t{crisp ? TermKind::Jc : TermKind::J};
  t.kids = {std::move(A), std::move(x), std::move(C),
            std::move(z), std::move(y), std::move(p)};
  return node(std::move(t));
}
TermPtr mk_unit() { return node(CoreTerm{TermKind::Unit}); }
TermPtr mk_tt() { return node(CoreTerm{TermKind::TT}); }
TermPtr mk_empty() { return node(CoreTerm{TermKind::Empty}); }
TermPtr mk_absurd(TermPtr A, TermPtr e) {
  CoreTerm t{TermKind::Absurd};
  t.kids = {std::move(A), std::move(e)};
  return node(std::move(t));
}
TermPtr mk_const(std::string name, std::vector<LevelExpr> levels) {
  CoreTerm t{TermKind::Const};
  t.name = std::move(name);
  t.levels = std::move(levels);
  return node(std::move(t));
}

int child_binders(TermKind kind, size_t child) {
  switch (kind) {
    case TermKind::Pi:
    case TermKind::Sigma:
      return child == 1 ? 1 : 0;
    case TermKind::Lam:
      return 1;
    default:
      return 0;
  }
}

namespace {

template <typename F>
TermPtr map_vars(const TermPtr& t, int depth, F&& f) {
  switch (t->kind) {
    case TermKind::Var:
      return f(t, depth);
    case TermKind::Universe:
    case TermKind::UniverseAny:
    case TermKind::Refl:
    case TermKind::Unit:
    case TermKind::TT:
    case TermKind::Empty:
    case TermKind::Const:
      return t;
    default: {
      CoreTerm copy = *t;
      bool changed = false;
      for (size_t i = 0; i < copy.kids.size(); i++) {
        TermPtr k = map_vars(copy.kids[i], depth + child_binders(t->kind, i),
                             std::forward<F>(f));
        if (k != copy.kids[i]) changed = true;
        copy.kids[i] = std::move(k);
      }
      if (!changed) return t;
      return std::make_shared<CoreTerm>(std::move(copy));
    }
  }
}

} // namespace

TermPtr shift(const TermPtr& t, int by, int cutoff) {
  if (by == 0) return t;
  return map_vars(t, cutoff, [&](const TermPtr& v, int depth) -> TermPtr {
    if (v->index < depth) return v;
    return mk_var(v->index + by, v->name);
  });
}

TermPtr substitute(const TermPtr& t, const TermPtr& a, int index) {
  return map_vars(t, 0, [&](const TermPtr& v, int depth) -> TermPtr {
    int target = index + depth;
    if (v->index == target) return shift(a, depth);
    if (v->index > target) return mk_var(v->index - 1, v->name);
    return v;
  });
}

TermPtr instantiate_levels(const TermPtr& t, const std::vector<LevelExpr>& args) {
  switch (t->kind) {
    case TermKind::Universe:
      return mk_universe(level_instantiate(t->level, args));
    case TermKind::Const: {
      std::vector<LevelExpr> ls;
      ls.reserve(t->levels.size());
      for (auto& l : t->levels) ls.push_back(level_instantiate(l, args));
      return mk_const(t->name, std::move(ls));
    }
    case TermKind::Var:
    case TermKind::UniverseAny:
    case TermKind::Refl:
    case TermKind::Unit:
    case TermKind::TT:
    case TermKind::Empty:
      return t;
    default: {
      CoreTerm copy = *t;
      for (auto& k : copy.kids) k = instantiate_levels(k, args);
      return std::make_shared<CoreTerm>(std::move(copy));
    }
  }
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var:
      if (a->index != b->index) return false;
      break;
    case TermKind::Universe:
      if (a->level != b->level) return false;
      break;
    case TermKind::Pi:
      if (a->modality != b->modality) return false;
      break;
    case TermKind::Const:
      if (a->name != b->name || a->levels != b->levels) return false;
      break;
    default:
      break;
  }
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); i++)
    if (!term_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

} // namespace crisp
