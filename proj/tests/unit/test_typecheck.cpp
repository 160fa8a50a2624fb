#include <doctest.h>

#include "../common/gen.hpp"

using namespace crisp;

namespace {

struct Session {
  Signature sig;
  Eval ev{sig};
  void load(const std::string& script, const std::string& origin = "<test>") {
    for (auto& d : parse_module(tokenize(script))) {
      if (d.kind == DeclKind::Import) continue;
      check_declaration(sig, ev, d, origin);
    }
  }
  DiagCode fails_with(const std::string& script) {
    try {
      load(script);
    } catch (const CheckError& e) {
      return e.code;
    }
    FAIL("expected a failure");
    return DiagCode::Conv;
  }
};

} // namespace

TEST_CASE("crisp function applied to an ordinary variable is rejected") {
  Session s;
  DiagCode c = s.fails_with(
      "postulate A : Set0\n"
      "def wrong (B : Set0) (f : (z :: A) -> B) (x : A) : B := f x\n");
  CHECK(c == DiagCode::CrispVar);
}

TEST_CASE("the crisp variant succeeds") {
  Session s;
  s.load(
      "postulate A : Set0\n"
      "def right (B : Set0) (f : (z :: A) -> B) (x :: A) : B := f x\n");
  CHECK(s.sig.find("right") != nullptr);
}

TEST_CASE("ordinary variable in an unrestricted context") {
  Session s;
  s.load(
      "postulate A : Set0\n"
      "def use (x : A) : A := x\n");
  CHECK(s.sig.find("use") != nullptr);
}

TEST_CASE("lambda binds by the modality of the expected function type") {
  Session s;
  s.load("postulate A : Set0\n");
  // crisp target
  s.load("def idc : (x :: A) -> A := \\x. x\n");
  const SigEntry* idc = s.sig.find("idc");
  REQUIRE(idc);
  CHECK(idc->type->modality == Modality::Crisp);
  // ordinary target
  s.load("def ido : (x : A) -> A := \\x. x\n");
  CHECK(s.sig.find("ido")->type->modality == Modality::Ordinary);
}

TEST_CASE("tt against Empty is a conversion error") {
  Session s;
  CHECK(s.fails_with("def bad : Empty := tt\n") == DiagCode::Conv);
}

TEST_CASE("crisp argument positions accept closed and crisp-variable terms") {
  Session s;
  s.load(
      "postulate A : Set0\n"
      "postulate a : A\n"
      "postulate h : (x :: A) -> A\n"
      "def closed : A := h a\n"
      "def viacrisp (y :: A) : A := h y\n");
  CHECK(s.sig.find("closed"));
  CHECK(s.sig.find("viacrisp"));
}

TEST_CASE("blocked code application under a local interval variable") {
  Session s;
  s.load(
      "postulate I : Set0\n"
      "postulate O1 : I\n"
      "postulate U : Set1\n"
      "postulate code : (phi :: I -> Set0) -> U\n");
  DiagCode c = s.fails_with("def bad (i : I) : U := code (\\z. Eq I O1 i)\n");
  CHECK(c == DiagCode::CrispVar);
}

TEST_CASE("Jc requires a crisp path; ordinary J does not") {
  Session s;
  s.load(
      "postulate A : Set0\n"
      "postulate a : A\n");
  DiagCode c = s.fails_with(
      "def bad (y : A) (p : Eq A a y) : A := Jc A a (\\y1. \\p1. A) a y p\n");
  CHECK(c == DiagCode::CrispVar);
  s.load("def ok (y : A) (p : Eq A a y) : A := J A a (\\y1. \\p1. A) a y p\n");
  CHECK(s.sig.find("ok"));
  s.load("def okc (y :: A) (p :: Eq A a y) : A := Jc A a (\\y1. \\p1. A) a y p\n");
  CHECK(s.sig.find("okc"));
}

TEST_CASE("Jc beta: Jc C z x refl is convertible to z") {
  Session s;
  s.load(
      "postulate A : Set0\n"
      "postulate a : A\n"
      "def jcbeta : A := Jc A a (\\y1. \\p1. A) a a refl\n");
  const SigEntry* e = s.sig.find("jcbeta");
  REQUIRE(e);
  Env env;
  ValuePtr v = s.ev.eval(env, e->body);
  REQUIRE(v->kind == VKind::Neutral);
  CHECK(v->neutral.const_name == "a");
}

TEST_CASE("crisp Pi formation restricts the domain") {
  Session s;
  s.load("postulate A : Set0\n");
  DiagCode c = s.fails_with(
      "def bad (x : A) : Set0 := (y :: Eq A x x) -> Empty\n");
  CHECK(c == DiagCode::CrispVar);
  s.load("def ok (x :: A) : Set0 := (y :: Eq A x x) -> Empty\n");
  CHECK(s.sig.find("ok"));
}

TEST_CASE("declaration checking: postulates, universe errors, duplicates") {
  Session s;
  s.load("postulate cof : Set0 -> Set0\n");
  CHECK(s.sig.find("cof"));
  CHECK(s.fails_with("def bad : Set0 := Set0\n") == DiagCode::Univ);
  s.load("postulate I : Set0\n");
  CHECK(s.fails_with("postulate I : Set1\n") == DiagCode::Duplicate);
}

TEST_CASE("level-polymorphic constants demand their level arguments") {
  Session s;
  s.load("def idt (l : Lvl) (A : Set l) : Set l := A\n");
  s.load("def use : Set1 -> Set1 := \\X. idt (lsuc lzero) X\n");
  CHECK(s.sig.find("use"));
  CHECK(s.fails_with("def bad : Set0 := idt\n") == DiagCode::Univ);
  CHECK(s.fails_with("def bad2 (l : Lvl) : Set l := idt l\n") == DiagCode::Conv);
}

TEST_CASE("scope errors") {
  Session s;
  CHECK(s.fails_with("def bad : Set0 := nonexistent\n") == DiagCode::Scope);
}

TEST_CASE("non-cumulativity: universe levels must match exactly") {
  Session s;
  s.load("postulate A : Set0\n");
  CHECK(s.fails_with("def bad : Set2 := Set0 -> Set0\n") == DiagCode::Univ);
  s.load("def ok : Set1 := Set0 -> Set0\n");
  CHECK(s.sig.find("ok"));
}

TEST_CASE("elaborated corpus terms re-check under the core pass") {
  Session s;
  s.load(
      "postulate A : Set0\n"
      "postulate B : A -> Set0\n"
      "postulate f : (x : A) -> B x\n"
      "postulate h : (x :: A) -> A\n"
      "def comp2 (x :: A) : A := h (h x)\n"
      "def etaf : (x : A) -> B x := \\x. f x\n"
      "def pairup (x : A) : A * A := (x , x)\n");
  for (auto& e : s.sig.entries()) REQUIRE_NOTHROW(core_check_entry(s.ev, e));
}

TEST_CASE("double-check rejects a modality-violating core term") {
  Session s;
  s.load(
      "postulate A : Set0\n"
      "postulate h : (x :: A) -> A\n");
  // hand-build: \x. h x with x bound *ordinary* — must fail the core pass
  TermPtr bad = mk_lam("x", mk_app(mk_const("h", {}), mk_var(0)));
  Env env;
  ValuePtr ordinary_ty = s.ev.eval(
      env, mk_pi(Modality::Ordinary, "x", mk_const("A", {}), mk_const("A", {})));
  Ctx ctx;
  CHECK_THROWS_AS(core_check(s.ev, ctx, bad, ordinary_ty), CheckError);
}
