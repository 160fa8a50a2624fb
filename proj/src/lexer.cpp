#include "crisp/token.hpp"

#include <cctype>
#include <map>

namespace crisp {

namespace {

bool ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum((unsigned char)c) || c == '_' || c == '\'';
}

const std::map<std::string, Tok>& keyword_map() {
  static const std::map<std::string, Tok> m = {
      {"postulate", Tok::KwPostulate}, {"def", Tok::KwDef},
      {"import", Tok::KwImport},       {"Set", Tok::KwSet},
      {"Lvl", Tok::KwLvl},             {"Eq", Tok::KwEq},
      {"refl", Tok::KwRefl},           {"J", Tok::KwJ},
      {"Jc", Tok::KwJc},               {"Unit", Tok::KwUnit},
      {"tt", Tok::KwTT},               {"Empty", Tok::KwEmpty},
      {"absurd", Tok::KwAbsurd},       {"fst", Tok::KwFst},
      {"snd", Tok::KwSnd},             {"lzero", Tok::KwLzero},
      {"lsuc", Tok::KwLsuc},           {"lmax", Tok::KwLmax},
  };
  return m;
}

} // namespace

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = src.size();
  auto push = [&](TokenKind k, Tok t, size_t b, size_t e) {
    out.push_back(Token{k, t, src.substr(b, e - b), Span{b, e}});
  };
  while (i < n) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      i++;
      continue;
    }
    if (c == '-' && i + 1 < n && src[i + 1] == '-') {
      while (i < n && src[i] != '\n') i++;
      continue;
    }
    size_t b = i;
    switch (c) {
      case '(': push(TokenKind::Punctuation, Tok::LParen, b, ++i); continue;
      case ')': push(TokenKind::Punctuation, Tok::RParen, b, ++i); continue;
      case '*': push(TokenKind::Punctuation, Tok::Star, b, ++i); continue;
      case '\\': push(TokenKind::Punctuation, Tok::Lambda, b, ++i); continue;
      case '.': push(TokenKind::Punctuation, Tok::Dot, b, ++i); continue;
      case ',': push(TokenKind::Punctuation, Tok::Comma, b, ++i); continue;
      default: break;
    }
    if (c == '-') {
      if (i + 1 < n && src[i + 1] == '>') {
        i += 2;
        push(TokenKind::Punctuation, Tok::Arrow, b, i);
        continue;
      }
      throw CheckError(DiagCode::Lex, "stray '-'; expected '->' or '--'", Span{b, b + 1});
    }
    if (c == ':') {
      if (i + 1 < n && src[i + 1] == ':') {
        i += 2;
        push(TokenKind::Punctuation, Tok::DColon, b, i);
        continue;
      }
      if (i + 1 < n && src[i + 1] == '=') {
        i += 2;
        push(TokenKind::Punctuation, Tok::Assign, b, i);
        continue;
      }
      push(TokenKind::Punctuation, Tok::Colon, b, ++i);
      continue;
    }
    if (ident_start(c)) {
      while (i < n && ident_cont(src[i])) i++;
      std::string word = src.substr(b, i - b);
      // SetN is a single level-literal token.
      if (word.size() > 3 && word.compare(0, 3, "Set") == 0) {
        bool digits = true;
        for (size_t k = 3; k < word.size(); k++)
          if (!std::isdigit((unsigned char)word[k])) { digits = false; break; }
        if (digits) {
          Token t{TokenKind::LevelLiteral, Tok::SetLevel, word, Span{b, i}};
          t.level = (unsigned)std::stoul(word.substr(3));
          out.push_back(t);
          continue;
        }
      }
      auto it = keyword_map().find(word);
      if (it != keyword_map().end()) {
        push(TokenKind::Keyword, it->second, b, i);
      } else {
        push(TokenKind::Identifier, Tok::Ident, b, i);
      }
      continue;
    }
    throw CheckError(DiagCode::Lex,
                     std::string("byte '") + c + "' matches no lexical rule",
                     Span{b, b + 1});
  }
  out.push_back(Token{TokenKind::End, Tok::Eof, "", Span{n, n}});
  return out;
}

} // namespace crisp
