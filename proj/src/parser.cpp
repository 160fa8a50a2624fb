#include "crisp/ast.hpp"

#include <set>

namespace crisp {

namespace {

class Parser {
public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  std::vector<RawDecl> module() {
    std::vector<RawDecl> decls;
    while (peek().tok != Tok::Eof) decls.push_back(decl());
    return decls;
  }

  RawTerm standalone_term() {
    RawTerm t = term();
    expect(Tok::Eof, "end of input");
    return t;
  }

private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;

  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    if (i >= toks_.size()) i = toks_.size() - 1;
    return toks_[i];
  }
  const Token& advance() { return toks_[pos_++]; }
  bool at(Tok t) const { return peek().tok == t; }
  bool accept(Tok t) {
    if (at(t)) { pos_++; return true; }
    return false;
  }
  const Token& expect(Tok t, const std::string& what) {
    if (!at(t))
      fail("expected " + what + ", found '" + describe(peek()) + "'");
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw CheckError(DiagCode::Parse, msg, peek().span);
  }
  static std::string describe(const Token& t) {
    if (t.tok == Tok::Eof) return "end of input";
    return t.lexeme;
  }

  // ---- declarations -------------------------------------------------

  RawDecl decl() {
    const Token& kw = peek();
    if (accept(Tok::KwImport)) {
      const Token& name = expect(Tok::Ident, "module name");
      RawDecl d;
      d.kind = DeclKind::Import;
      d.name = name.lexeme;
      d.span = Span{kw.span.begin, name.span.end};
      return d;
    }
    bool is_def = at(Tok::KwDef);
    if (!is_def && !at(Tok::KwPostulate))
      fail("expected 'postulate', 'def' or 'import'");
    advance();
    const Token& name = expect(Tok::Ident, "declaration name");

    RawDecl d;
    d.kind = is_def ? DeclKind::Def : DeclKind::Postulate;
    d.name = name.lexeme;

    // Head binders: level parameters first, then term binders.
    struct TermParam { std::string name; Modality mod; RawTerm type; Span span; };
    std::vector<TermParam> params;
    std::set<std::string> seen;
    bool levels_done = false;
    while (at(Tok::LParen)) {
      Span open = peek().span;
      advance();
      const Token& pname = expect(Tok::Ident, "parameter name");
      Modality mod = Modality::Ordinary;
      if (accept(Tok::DColon)) {
        mod = Modality::Crisp;
      } else {
        expect(Tok::Colon, "':' or '::'");
      }
      if (pname.lexeme != "_" && !seen.insert(pname.lexeme).second)
        throw CheckError(DiagCode::Parse,
                         "duplicate parameter name '" + pname.lexeme + "'",
                         pname.span);
      if (at(Tok::KwLvl)) {
        if (mod == Modality::Crisp)
          fail("level parameters take ':', not '::'");
        advance();
        if (levels_done)
          throw CheckError(DiagCode::Parse,
                           "level parameters must precede all term parameters",
                           pname.span);
        d.level_params.push_back(pname.lexeme);
        expect(Tok::RParen, "')'");
        continue;
      }
      levels_done = true;
      RawTerm ty = term();
      const Token& close = expect(Tok::RParen, "')'");
      params.push_back(TermParam{pname.lexeme, mod, std::move(ty),
                                 Span{open.begin, close.span.end}});
    }

    expect(Tok::Colon, "':'");
    RawTerm stated = term();
    std::optional<RawTerm> body;
    if (d.kind == DeclKind::Def) {
      expect(Tok::Assign, "':='");
      body = term();
    }

    // Fold term binders into the stated type (and lambdas into the body).
    for (size_t i = params.size(); i-- > 0;) {
      RawTerm pi;
      pi.kind = RawKind::Pi;
      pi.name = params[i].name;
      pi.modality = params[i].mod;
      pi.span = Span{params[i].span.begin, stated.span.end};
      pi.kids.push_back(params[i].type);
      pi.kids.push_back(std::move(stated));
      stated = std::move(pi);
      if (body) {
        RawTerm lam;
        lam.kind = RawKind::Lam;
        lam.name = params[i].name;
        lam.span = body->span;
        lam.kids.push_back(std::move(*body));
        body = std::move(lam);
      }
    }
    d.type = std::move(stated);
    d.body = std::move(body);
    size_t end = d.type->span.end;
    if (d.body) end = std::max(end, d.body->span.end);
    d.span = Span{kw.span.begin, end};
    return d;
  }

  // ---- terms ---------------------------------------------------------
  //
  // term    := '\' x '.' term | arrow
  // arrow   := binder ('->' term | '*' product ['->' term]) | product ['->' term]
  // product := binder '*' product | app ['*' product]
  // app     := unit atom*
  // A '(' IDENT ':' / '::' sequence commits to a binder group.

  bool binder_ahead() const {
    return peek(0).tok == Tok::LParen && peek(1).tok == Tok::Ident &&
           (peek(2).tok == Tok::Colon || peek(2).tok == Tok::DColon);
  }

  struct Binder { std::string name; Modality mod; RawTerm dom; Span span; };

  Binder binder() {
    Span open = peek().span;
    expect(Tok::LParen, "'('");
    const Token& name = expect(Tok::Ident, "binder name");
    Modality mod = accept(Tok::DColon) ? Modality::Crisp
                                       : (expect(Tok::Colon, "':'"), Modality::Ordinary);
    if (at(Tok::KwLvl))
      fail("level binders are prenex only; '(x : Lvl)' cannot appear inside a type");
    RawTerm dom = term();
    const Token& close = expect(Tok::RParen, "')'");
    return Binder{name.lexeme, mod, std::move(dom), Span{open.begin, close.span.end}};
  }

  RawTerm term() {
    if (at(Tok::Lambda)) {
      Span open = peek().span;
      advance();
      const Token& name = expect(Tok::Ident, "lambda binder");
      expect(Tok::Dot, "'.'");
      RawTerm body = term();
      RawTerm lam;
      lam.kind = RawKind::Lam;
      lam.name = name.lexeme;
      lam.span = Span{open.begin, body.span.end};
      lam.kids.push_back(std::move(body));
      return lam;
    }
    return arrow();
  }

  RawTerm arrow() {
    if (binder_ahead()) {
      Binder b = binder();
      if (accept(Tok::Arrow)) {
        RawTerm cod = term();
        return make_pi(std::move(b), std::move(cod));
      }
      if (at(Tok::Star)) {
        if (b.mod == Modality::Crisp)
          fail("a crisp binder '(x :: A)' must be followed by '->'");
        advance();
        RawTerm second = product();
        RawTerm sig = make_sigma(std::move(b), std::move(second));
        if (accept(Tok::Arrow)) {
          RawTerm cod = term();
          return make_arrow(std::move(sig), std::move(cod));
        }
        return sig;
      }
      fail("expected '->' or '*' after binder");
    }
    RawTerm lhs = product();
    if (accept(Tok::Arrow)) {
      RawTerm cod = term();
      return make_arrow(std::move(lhs), std::move(cod));
    }
    return lhs;
  }

  RawTerm product() {
    if (binder_ahead()) {
      Binder b = binder();
      if (b.mod == Modality::Crisp)
        fail("a crisp binder '(x :: A)' must be followed by '->'");
      expect(Tok::Star, "'*' after binder");
      RawTerm second = product();
      return make_sigma(std::move(b), std::move(second));
    }
    RawTerm lhs = app();
    if (accept(Tok::Star)) {
      RawTerm rhs = product();
      Span sp = lhs.span;
      Binder b{"_", Modality::Ordinary, std::move(lhs), sp};
      return make_sigma(std::move(b), std::move(rhs));
    }
    return lhs;
  }

  static RawTerm make_pi(Binder b, RawTerm cod) {
    RawTerm pi;
    pi.kind = RawKind::Pi;
    pi.name = std::move(b.name);
    pi.modality = b.mod;
    pi.span = Span{b.span.begin, cod.span.end};
    pi.kids.push_back(std::move(b.dom));
    pi.kids.push_back(std::move(cod));
    return pi;
  }

  static RawTerm make_arrow(RawTerm dom, RawTerm cod) {
    Span sp = dom.span;
    Binder b{"_", Modality::Ordinary, std::move(dom), sp};
    return make_pi(std::move(b), std::move(cod));
  }

  static RawTerm make_sigma(Binder b, RawTerm second) {
    RawTerm sig;
    sig.kind = RawKind::Sigma;
    sig.name = std::move(b.name);
    sig.span = Span{b.span.begin, second.span.end};
    sig.kids.push_back(std::move(b.dom));
    sig.kids.push_back(std::move(second));
    return sig;
  }

  bool atom_ahead() const {
    switch (peek().tok) {
      case Tok::Ident: case Tok::LParen: case Tok::SetLevel:
      case Tok::KwSet: case Tok::KwEq: case Tok::KwRefl: case Tok::KwJ:
      case Tok::KwJc: case Tok::KwUnit: case Tok::KwTT: case Tok::KwEmpty:
      case Tok::KwAbsurd: case Tok::KwFst: case Tok::KwSnd:
      case Tok::KwLzero: case Tok::KwLsuc: case Tok::KwLmax:
        return true;
      default:
        return false;
    }
  }

  static bool needs_args(Tok t) {
    switch (t) {
      case Tok::KwSet: case Tok::KwEq: case Tok::KwJ: case Tok::KwJc:
      case Tok::KwAbsurd: case Tok::KwFst: case Tok::KwSnd:
      case Tok::KwLsuc: case Tok::KwLmax:
        return true;
      default:
        return false;
    }
  }

  RawTerm app() {
    RawTerm head = unit(/*allow_arity=*/true);
    while (atom_ahead()) {
      if (needs_args(peek().tok))
        fail("'" + peek().lexeme + "' takes arguments and must be parenthesized here");
      RawTerm arg = unit(false);
      RawTerm a;
      a.kind = RawKind::App;
      a.span = Span{head.span.begin, arg.span.end};
      a.kids.push_back(std::move(head));
      a.kids.push_back(std::move(arg));
      head = std::move(a);
    }
    return head;
  }

  RawTerm keyword_form(RawKind kind, size_t arity, const Token& kw) {
    RawTerm t;
    t.kind = kind;
    t.span = kw.span;
    for (size_t i = 0; i < arity; i++) {
      if (!atom_ahead())
        fail("'" + kw.lexeme + "' expects " + std::to_string(arity) +
             " argument(s)");
      if (needs_args(peek().tok))
        fail("'" + peek().lexeme + "' takes arguments and must be parenthesized here");
      t.kids.push_back(unit(false));
    }
    if (!t.kids.empty()) t.span.end = t.kids.back().span.end;
    return t;
  }

  RawTerm unit(bool allow_arity) {
    const Token& tk = peek();
    if (needs_args(tk.tok) && !allow_arity)
      fail("'" + tk.lexeme + "' takes arguments and must be parenthesized here");
    switch (tk.tok) {
      case Tok::Ident: {
        advance();
        RawTerm t;
        t.kind = RawKind::Var;
        t.name = tk.lexeme;
        t.span = tk.span;
        return t;
      }
      case Tok::SetLevel: {
        advance();
        RawTerm t;
        t.kind = RawKind::Universe;
        t.universe_literal = true;
        t.universe_level = tk.level;
        t.span = tk.span;
        return t;
      }
      case Tok::KwSet: {
        advance();
        RawTerm t = keyword_form(RawKind::Universe, 1, tk);
        t.universe_literal = false;
        return t;
      }
      case Tok::KwRefl: advance(); return simple(RawKind::Refl, tk);
      case Tok::KwTT: advance(); return simple(RawKind::UnitVal, tk);
      case Tok::KwUnit: advance(); return simple(RawKind::UnitType, tk);
      case Tok::KwEmpty: advance(); return simple(RawKind::EmptyType, tk);
      case Tok::KwLzero: advance(); return simple(RawKind::LZero, tk);
      case Tok::KwLsuc: advance(); return keyword_form(RawKind::LSuc, 1, tk);
      case Tok::KwLmax: advance(); return keyword_form(RawKind::LMax, 2, tk);
      case Tok::KwFst: advance(); return keyword_form(RawKind::Fst, 1, tk);
      case Tok::KwSnd: advance(); return keyword_form(RawKind::Snd, 1, tk);
      case Tok::KwEq: advance(); return keyword_form(RawKind::Eq, 3, tk);
      case Tok::KwAbsurd: advance(); return keyword_form(RawKind::EmptyElim, 2, tk);
      case Tok::KwJ: advance(); return keyword_form(RawKind::J, 6, tk);
      case Tok::KwJc: advance(); return keyword_form(RawKind::Jc, 6, tk);
      case Tok::LParen: {
        Span open = tk.span;
        advance();
        RawTerm inner = term();
        if (accept(Tok::Colon)) {
          RawTerm ty = term();
          const Token& close = expect(Tok::RParen, "')'");
          RawTerm ann;
          ann.kind = RawKind::Annotation;
          ann.span = Span{open.begin, close.span.end};
          ann.kids.push_back(std::move(inner));
          ann.kids.push_back(std::move(ty));
          return ann;
        }
        if (at(Tok::Comma)) {
          std::vector<RawTerm> elems;
          elems.push_back(std::move(inner));
          while (accept(Tok::Comma)) elems.push_back(term());
          const Token& close = expect(Tok::RParen, "')'");
          RawTerm acc = std::move(elems.back());
          for (size_t i = elems.size() - 1; i-- > 0;) {
            RawTerm p;
            p.kind = RawKind::Pair;
            p.span = Span{open.begin, close.span.end};
            p.kids.push_back(std::move(elems[i]));
            p.kids.push_back(std::move(acc));
            acc = std::move(p);
          }
          acc.span = Span{open.begin, close.span.end};
          return acc;
        }
        const Token& close = expect(Tok::RParen, "')'");
        inner.span = Span{open.begin, close.span.end};
        return inner;
      }
      default:
        fail("expected a term, found '" + describe(tk) + "'");
    }
  }

  static RawTerm simple(RawKind k, const Token& tk) {
    RawTerm t;
    t.kind = k;
    t.span = tk.span;
    return t;
  }
};

} // namespace

std::vector<RawDecl> parse_module(const std::vector<Token>& tokens) {
  return Parser(tokens).module();
}

RawTerm parse_term_string(const std::string& source) {
  return Parser(tokenize(source)).standalone_term();
}

bool raw_equal(const RawTerm& a, const RawTerm& b) {
  if (a.kind != b.kind || a.name != b.name || a.modality != b.modality)
    return false;
  if (a.kind == RawKind::Universe) {
    if (a.universe_literal != b.universe_literal) return false;
    if (a.universe_literal && a.universe_level != b.universe_level) return false;
  }
  if (a.kids.size() != b.kids.size()) return false;
  for (size_t i = 0; i < a.kids.size(); i++)
    if (!raw_equal(a.kids[i], b.kids[i])) return false;
  return true;
}

bool raw_decl_equal(const RawDecl& a, const RawDecl& b) {
  if (a.kind != b.kind || a.name != b.name || a.level_params != b.level_params)
    return false;
  if (a.type.has_value() != b.type.has_value()) return false;
  if (a.type && !raw_equal(*a.type, *b.type)) return false;
  if (a.body.has_value() != b.body.has_value()) return false;
  if (a.body && !raw_equal(*a.body, *b.body)) return false;
  return true;
}

} // namespace crisp
