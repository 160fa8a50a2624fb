#ifndef CRISP_TESTS_LEVEL_ORACLE_HPP
#define CRISP_TESTS_LEVEL_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "crisp/level.hpp"

// Raw (un-normalized) level expressions plus a direct evaluator, independent
// of the canonical-form code under test.
namespace level_oracle {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum Kind { Zero, Var, Suc, Max } kind;
  uint32_t var = 0;
  ExprPtr a, b;
};

inline ExprPtr zero() { return std::make_shared<Expr>(Expr{Expr::Zero}); }
inline ExprPtr var(uint32_t v) {
  Expr e{Expr::Var};
  e.var = v;
  return std::make_shared<Expr>(e);
}
inline ExprPtr suc(ExprPtr x) {
  Expr e{Expr::Suc};
  e.a = std::move(x);
  return std::make_shared<Expr>(e);
}
inline ExprPtr max(ExprPtr x, ExprPtr y) {
  Expr e{Expr::Max};
  e.a = std::move(x);
  e.b = std::move(y);
  return std::make_shared<Expr>(e);
}

inline unsigned eval(const ExprPtr& e, const std::vector<unsigned>& assignment) {
  switch (e->kind) {
    case Expr::Zero: return 0;
    case Expr::Var: return e->var < assignment.size() ? assignment[e->var] : 0;
    case Expr::Suc: return eval(e->a, assignment) + 1;
    case Expr::Max: return std::max(eval(e->a, assignment), eval(e->b, assignment));
  }
  return 0;
}

inline crisp::LevelExpr normalize(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Zero: return crisp::LevelExpr::make_const(0);
    case Expr::Var: return crisp::LevelExpr::make_var(e->var);
    case Expr::Suc: return crisp::level_suc(normalize(e->a));
    case Expr::Max: return crisp::level_max(normalize(e->a), normalize(e->b));
  }
  return {};
}

// All expressions of syntactic depth <= depth over variables 0..nvars-1.
inline std::vector<ExprPtr> enumerate(int depth, uint32_t nvars) {
  std::vector<std::vector<ExprPtr>> by_depth;
  std::vector<ExprPtr> leaves;
  leaves.push_back(zero());
  for (uint32_t v = 0; v < nvars; v++) leaves.push_back(var(v));
  by_depth.push_back(leaves);
  for (int d = 1; d < depth; d++) {
    std::vector<ExprPtr> next = by_depth[0]; // leaves again at any depth
    const auto& prev = by_depth[(size_t)d - 1];
    for (auto& x : prev) next.push_back(suc(x));
    for (auto& x : prev)
      for (auto& y : prev) next.push_back(max(x, y));
    by_depth.push_back(std::move(next));
  }
  return by_depth.back();
}

// Every assignment of values 0..maxval to nvars variables.
inline std::vector<std::vector<unsigned>> assignments(uint32_t nvars, unsigned maxval) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(nvars, 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    while (i < nvars && cur[i] == maxval) cur[i++] = 0;
    if (i == nvars) break;
    cur[i]++;
  }
  return out;
}

} // namespace level_oracle

#endif
