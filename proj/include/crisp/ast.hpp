#ifndef CRISP_AST_HPP
#define CRISP_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crisp/diagnostics.hpp"
#include "crisp/token.hpp"

namespace crisp {

enum class Modality { Crisp, Ordinary };

enum class RawKind {
  Var,        // name
  Universe,   // Set<k> literal or `Set l` with a level child
  LZero,      // level atoms, only meaningful in level positions
  LSuc,       // kids: {l}
  LMax,       // kids: {l, m}
  Pi,         // binder, kids: {dom, cod}
  Lam,        // binder, kids: {body}
  App,        // kids: {fun, arg}
  Sigma,      // binder, kids: {first, second}
  Pair,       // kids: {a, b}
  Fst,        // kids: {t}
  Snd,        // kids: {t}
  Eq,         // kids: {type, lhs, rhs}
  Refl,
  J,          // kids: {A, x, C, z, y, p}
  Jc,         // kids: {A, x, C, z, y, p}
  UnitType,
  UnitVal,
  EmptyType,
  EmptyElim,  // kids: {A, e}
  Annotation, // kids: {term, type}
};

struct RawTerm {
  RawKind kind = RawKind::Var;
  std::string name;          // Var name / binder name
  Modality modality = Modality::Ordinary; // for Pi
  bool universe_literal = false;
  unsigned universe_level = 0;
  Span span;
  std::vector<RawTerm> kids;
};

enum class DeclKind { Postulate, Def, Import };

struct RawDecl {
  DeclKind kind;
  std::string name;
  std::vector<std::string> level_params; // prenex
  std::optional<RawTerm> type;           // absent for import
  std::optional<RawTerm> body;           // present only for def
  Span span;
};

// Parses a token stream into declarations. Throws CheckError(E-PARSE).
std::vector<RawDecl> parse_module(const std::vector<Token>& tokens);

// Entry point used by tests: parse a single standalone term.
RawTerm parse_term_string(const std::string& source);

// Structural equality ignoring spans.
bool raw_equal(const RawTerm& a, const RawTerm& b);
bool raw_decl_equal(const RawDecl& a, const RawDecl& b);

} // namespace crisp

#endif
