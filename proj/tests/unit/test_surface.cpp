#include <doctest.h>

#include "crisp/ast.hpp"
#include "crisp/pretty.hpp"
#include "crisp/token.hpp"

using namespace crisp;

TEST_CASE("tokenize crisp binder") {
  auto toks = tokenize("(x :: A) -> B");
  REQUIRE(toks.size() == 8); // incl. EOF
  CHECK(toks[0].tok == Tok::LParen);
  CHECK(toks[1].tok == Tok::Ident);
  CHECK(toks[1].lexeme == "x");
  CHECK(toks[2].tok == Tok::DColon);
  CHECK(toks[3].lexeme == "A");
  CHECK(toks[4].tok == Tok::RParen);
  CHECK(toks[5].tok == Tok::Arrow);
  CHECK(toks[6].lexeme == "B");
}

TEST_CASE("tokenize drops comments") {
  auto toks = tokenize("\\x. x -- id");
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].tok == Tok::Lambda);
  CHECK(toks[1].lexeme == "x");
  CHECK(toks[2].tok == Tok::Dot);
  CHECK(toks[3].lexeme == "x");
}

TEST_CASE("tokenize level literals") {
  auto toks = tokenize("Set0 Set1");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].kind == TokenKind::LevelLiteral);
  CHECK(toks[0].level == 0);
  CHECK(toks[1].level == 1);
}

TEST_CASE("token spans are monotone and lexemes round-trip") {
  std::string src = "def id (A : Set0) (x : A) : A := x -- tail\n";
  auto toks = tokenize(src);
  size_t prev_end = 0;
  for (auto& t : toks) {
    if (t.kind == TokenKind::End) break;
    CHECK(t.span.begin >= prev_end);
    CHECK(t.span.end > t.span.begin);
    CHECK(src.substr(t.span.begin, t.span.end - t.span.begin) == t.lexeme);
    prev_end = t.span.end;
  }
}

TEST_CASE("tokenize rejects unknown bytes") {
  CHECK_THROWS_AS(tokenize("def bad@ : Set0"), CheckError);
  try {
    tokenize("a @ b");
  } catch (const CheckError& e) {
    CHECK(e.code == DiagCode::Lex);
    CHECK(e.span.begin == 2);
  }
}

TEST_CASE("parse postulate") {
  auto decls = parse_module(tokenize("postulate I : Set0"));
  REQUIRE(decls.size() == 1);
  CHECK(decls[0].kind == DeclKind::Postulate);
  CHECK(decls[0].name == "I");
  CHECK(decls[0].type->kind == RawKind::Universe);
  CHECK(decls[0].type->universe_level == 0);
  CHECK_FALSE(decls[0].body.has_value());
}

TEST_CASE("parse def with ordinary parameters") {
  auto decls = parse_module(tokenize("def id (A : Set0) (x : A) : A := x"));
  REQUIRE(decls.size() == 1);
  const RawDecl& d = decls[0];
  CHECK(d.kind == DeclKind::Def);
  REQUIRE(d.type->kind == RawKind::Pi);
  CHECK(d.type->modality == Modality::Ordinary);
  CHECK(d.type->name == "A");
  REQUIRE(d.type->kids[1].kind == RawKind::Pi);
  CHECK(d.type->kids[1].name == "x");
  REQUIRE(d.body->kind == RawKind::Lam);
  CHECK(d.body->kids[0].kind == RawKind::Lam);
}

TEST_CASE("parse def with prenex level parameter") {
  auto decls = parse_module(
      tokenize("def Path (l : Lvl) (A : Set l) : Set l := I -> A"));
  REQUIRE(decls.size() == 1);
  const RawDecl& d = decls[0];
  REQUIRE(d.level_params.size() == 1);
  CHECK(d.level_params[0] == "l");
  REQUIRE(d.type->kind == RawKind::Pi);
  CHECK(d.type->kids[0].kind == RawKind::Universe);
  CHECK_FALSE(d.type->kids[0].universe_literal);
}

TEST_CASE("level parameters must be prenex") {
  CHECK_THROWS_AS(
      parse_module(tokenize("def f (A : Set0) (l : Lvl) : Set l := A")),
      CheckError);
}

TEST_CASE("parse rejects malformed input with E-PARSE") {
  try {
    parse_module(tokenize("def bad : := x"));
    CHECK(false);
  } catch (const CheckError& e) {
    CHECK(e.code == DiagCode::Parse);
  }
  CHECK_THROWS_AS(parse_module(tokenize("postulate")), CheckError);
  CHECK_THROWS_AS(parse_module(tokenize("def f : Set0")), CheckError);
}

TEST_CASE("crisp sigma is rejected") {
  CHECK_THROWS_AS(parse_term_string("(x :: A) * B"), CheckError);
}

TEST_CASE("pretty prints binders and round-trips") {
  RawTerm t = parse_term_string("(x :: A) -> B");
  CHECK(pretty(t) == "(x :: A) -> B");
  RawTerm app = parse_term_string("f a b");
  CHECK(pretty(app) == "f a b");
  RawTerm sig = parse_term_string("(x : A) * B");
  CHECK(pretty(sig) == "(x : A) * B");
}

TEST_CASE("pretty respects precedence") {
  const char* cases[] = {
      "(A -> B) -> C",
      "A -> B -> C",
      "A * B -> C",
      "(x : A) -> (y : B x) -> Eq A x x",
      "f (g a) (h b)",
      "\\x. \\y. f x y",
      "(f a , (x , y))",
      "fst (snd p)",
      "Set3",
      "Set (lmax l (lsuc m))",
      "J A x (\\y. \\p. Eq A x y) refl y p",
      "absurd (Eq I O1 I1) e",
      "(x : A) * ((y : B) -> C)",
  };
  for (const char* s : cases) {
    RawTerm once = parse_term_string(s);
    RawTerm twice = parse_term_string(pretty(once));
    CHECK_MESSAGE(raw_equal(once, twice), "case: ", s, " printed: ", pretty(once));
  }
}

TEST_CASE("every raw node span sits inside its parent") {
  RawTerm t = parse_term_string("(x : A) -> Eq (f x) (g x) (h x) * Unit");
  struct {
    void check(const RawTerm& n) {
      for (auto& k : n.kids) {
        // level children synthesized from literals share the parent span
        CHECK(k.span.begin >= n.span.begin);
        CHECK(k.span.end <= n.span.end);
        check(k);
      }
    }
  } walker;
  walker.check(t);
}
