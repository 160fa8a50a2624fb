#ifndef CRISP_VALUE_HPP
#define CRISP_VALUE_HPP

#include <memory>
#include <string>
#include <vector>

#include "crisp/term.hpp"

namespace crisp {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// Evaluation environment: one value per context entry (entries made
// inaccessible by restriction keep their placeholder neutral), plus the
// level assignment for the enclosing declaration's prenex parameters.
struct Env {
  std::vector<ValuePtr> vals;
  std::vector<LevelExpr> levels;
};

// A suspended term under an environment, or a constant result
// (used for internally synthesized types).
struct Closure {
  Env env;
  TermPtr body;
  ValuePtr constant;
};

enum class VKind {
  Universe,
  UniverseAny,
  Pi,      // a = dom, clo = cod, modality
  Sigma,   // a = dom, clo = cod
  EqT,     // a = type, b = lhs, c = rhs
  Lam,     // clo = body
  Pair,    // a, b
  Refl,
  Unit,
  TT,
  Empty,
  Neutral,
};

struct SpineEntry {
  enum Kind { App, Fst, Snd, JElim, AbsurdElim } kind;
  // App: {arg}; JElim: {A, x, C, z, y}; AbsurdElim: {A}
  std::vector<ValuePtr> args;
  bool crisp_j = false; // JElim: Jc rather than J
};

struct VNeutral {
  bool is_var = true;
  int var_level = 0;               // de Bruijn level
  std::string const_name;          // postulates
  std::vector<LevelExpr> const_levels;
  ValuePtr head_type;              // type of the head, drives spine typing
  std::vector<SpineEntry> spine;
};

struct Value {
  VKind kind;
  LevelExpr level;                 // Universe
  Modality modality = Modality::Ordinary; // Pi
  ValuePtr a, b, c;
  Closure clo;
  VNeutral neutral;
};

ValuePtr v_universe(LevelExpr l);
ValuePtr v_universe_any();
ValuePtr v_pi(Modality m, ValuePtr dom, Closure cod);
ValuePtr v_sigma(ValuePtr dom, Closure cod);
ValuePtr v_eq(ValuePtr A, ValuePtr l, ValuePtr r);
ValuePtr v_lam(Closure body);
ValuePtr v_pair(ValuePtr a, ValuePtr b);
ValuePtr v_refl();
ValuePtr v_unit();
ValuePtr v_tt();
ValuePtr v_empty();
ValuePtr v_var(int level, ValuePtr type);
ValuePtr v_const(std::string name, std::vector<LevelExpr> levels, ValuePtr type);

Closure const_closure(ValuePtr v);

} // namespace crisp

#endif
