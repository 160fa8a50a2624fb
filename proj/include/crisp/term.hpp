#ifndef CRISP_TERM_HPP
#define CRISP_TERM_HPP

#include <memory>
#include <string>
#include <vector>

#include "crisp/ast.hpp"
#include "crisp/level.hpp"

namespace crisp {

enum class TermKind {
  Var,         // de Bruijn index
  Universe,    // LevelExpr
  UniverseAny, // internal checking target; never stored in the signature
  Pi,          // kids: {dom, cod}; carries Modality
  Lam,         // kids: {body}
  App,         // kids: {fun, arg}
  Sigma,       // kids: {dom, cod}
  Pair,        // kids: {fst, snd}
  Fst,         // kids: {t}
  Snd,         // kids: {t}
  Eq,          // kids: {A, lhs, rhs}
  Refl,
  J,           // kids: {A, x, C, z, y, p}
  Jc,          // kids: {A, x, C, z, y, p}
  Unit,
  TT,
  Empty,
  Absurd,      // kids: {A, e}
  Const,       // signature reference with level arguments
};

struct CoreTerm;
using TermPtr = std::shared_ptr<const CoreTerm>;

struct CoreTerm {
  TermKind kind;
  int index = 0;                 // Var
  LevelExpr level;               // Universe
  Modality modality = Modality::Ordinary; // Pi
  std::string name;              // Const name; binder hint for Pi/Lam/Sigma
  std::vector<LevelExpr> levels; // Const level arguments
  std::vector<TermPtr> kids;
};

TermPtr mk_var(int index, std::string hint = {});
TermPtr mk_universe(LevelExpr l);
TermPtr mk_universe_any();
TermPtr mk_pi(Modality m, std::string hint, TermPtr dom, TermPtr cod);
TermPtr mk_lam(std::string hint, TermPtr body);
TermPtr mk_app(TermPtr f, TermPtr a);
TermPtr mk_sigma(std::string hint, TermPtr dom, TermPtr cod);
TermPtr mk_pair(TermPtr a, TermPtr b);
TermPtr mk_fst(TermPtr t);
TermPtr mk_snd(TermPtr t);
TermPtr mk_eq(TermPtr A, TermPtr l, TermPtr r);
TermPtr mk_refl();
TermPtr mk_j(bool crisp, TermPtr A, TermPtr x, TermPtr C, TermPtr z, TermPtr y, TermPtr p);
TermPtr mk_unit();
TermPtr mk_tt();
TermPtr mk_empty();
TermPtr mk_absurd(TermPtr A, TermPtr e);
TermPtr mk_const(std::string name, std::vector<LevelExpr> levels);

// Shifts free variables with index >= cutoff by `by`.
TermPtr shift(const TermPtr& t, int by, int cutoff = 0);

// Capture-avoiding substitution of `a` for variable `index` in `t`;
// variables above `index` are shifted down by one.
TermPtr substitute(const TermPtr& t, const TermPtr& a, int index);

// Instantiates level variables (under a declaration's prenex parameters).
TermPtr instantiate_levels(const TermPtr& t, const std::vector<LevelExpr>& args);

// Alpha-level structural equality (hints ignored).
bool term_equal(const TermPtr& a, const TermPtr& b);

// Number of binders a given child position of `kind` passes under.
int child_binders(TermKind kind, size_t child);

} // namespace crisp

#endif
