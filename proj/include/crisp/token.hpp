#ifndef CRISP_TOKEN_HPP
#define CRISP_TOKEN_HPP

#include <string>
#include <vector>

#include "crisp/diagnostics.hpp"

namespace crisp {

enum class TokenKind {
  Keyword,
  Identifier,
  Punctuation,
  LevelLiteral, // Set0 .. Set9
  End,
};

// Punctuation and keyword discrimination beyond the spec-level kind.
enum class Tok {
  // punctuation
  LParen, RParen, Arrow, Colon, DColon, Assign, Star, Lambda, Dot, Comma,
  // keywords
  KwPostulate, KwDef, KwImport, KwSet, KwLvl, KwEq, KwRefl, KwJ, KwJc,
  KwUnit, KwTT, KwEmpty, KwAbsurd, KwFst, KwSnd, KwLzero, KwLsuc, KwLmax,
  // others
  Ident, SetLevel, Eof,
};

struct Token {
  TokenKind kind;
  Tok tok;
  std::string lexeme;
  Span span;
  unsigned level = 0; // for SetLevel
};

// Lexes a whole file. Throws CheckError(E-LEX) on any byte sequence that
// matches no rule. Comments (`--` to end of line) are dropped.
std::vector<Token> tokenize(const std::string& source);

} // namespace crisp

#endif
