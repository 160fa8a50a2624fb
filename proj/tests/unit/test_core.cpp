#include <doctest.h>

#include "../common/gen.hpp"
#include "crisp/elaborate.hpp"
#include "crisp/term.hpp"

using namespace crisp;

TEST_CASE("substitute identity case") {
  TermPtr c = mk_tt();
  TermPtr r = substitute(mk_var(0), c, 0);
  CHECK(term_equal(r, c));
}

TEST_CASE("substitute shifts under binders") {
  // (\. #1)[c/0] == \. shift c
  TermPtr c = mk_app(mk_var(2), mk_var(0));
  TermPtr t = mk_lam("x", mk_var(1));
  TermPtr r = substitute(t, c, 0);
  CHECK(term_equal(r, mk_lam("x", shift(c, 1))));
}

TEST_CASE("substitute lowers variables above the target") {
  TermPtr t = mk_app(mk_var(3), mk_var(0));
  TermPtr r = substitute(t, mk_tt(), 0);
  CHECK(term_equal(r, mk_app(mk_var(2), mk_tt())));
}

TEST_CASE("substitution commutes with shifting") {
  // shift(t,1)[a/0] == t for any closed-enough t: substituting into a
  // freshly shifted term cancels the shift.
  TermPtr t = mk_app(mk_lam("x", mk_var(0)), mk_var(1));
  TermPtr a = mk_tt();
  CHECK(term_equal(substitute(shift(t, 1), a, 0), t));
}

TEST_CASE("checking t[a/x] against the substituted type, 50 random pairs") {
  gen::World w;
  auto pool = w.grow(160);
  // Extended context with one ordinary variable of type A.
  ValuePtr A = w.const_value("A");
  Ctx ext = w.ctx.extend("s", Modality::Ordinary, A);
  // t is built in ext (mentioning the new variable via eta), a in the base.
  int done = 0;
  for (size_t i = 0; i < pool.size() && done < 50; i++) {
    const gen::Typed& cand = pool[i];
    if (cand.type->kind != VKind::Pi) continue;
    if (cand.type->modality != Modality::Ordinary) continue;
    if (!w.ev.conv_type(w.ctx.depth(), cand.type->a, A)) continue;
    // t := (shift cand) applied to the bound variable
    TermPtr t = mk_app(shift(cand.term, 1), mk_var(0));
    ValuePtr tty = w.ev.apply_closure(cand.type->clo, ext.env.vals.back());
    REQUIRE_NOTHROW(core_check(w.ev, ext, t, tty));
    // pick a : A from the pool
    for (size_t j = 0; j < pool.size(); j++) {
      if (!w.ev.conv_type(w.ctx.depth(), pool[j].type, A)) continue;
      TermPtr a = pool[j].term;
      TermPtr t_sub = substitute(t, a, 0);
      // substituted type: quote the open type, substitute, evaluate
      TermPtr tty_core = w.ev.quote_type(ext.depth(), tty);
      TermPtr sub_ty = substitute(tty_core, a, 0);
      ValuePtr expect = w.ev.eval(w.ctx.env, sub_ty);
      REQUIRE_NOTHROW(core_check(w.ev, w.ctx, t_sub, expect));
      done++;
      if (done >= 50) break;
    }
  }
  CHECK(done >= 50);
}

TEST_CASE("restrict marks ordinary entries and is idempotent") {
  gen::World w;
  Ctx r1 = restrict_ctx(w.ctx);
  REQUIRE(r1.entries.size() == w.ctx.entries.size());
  CHECK(r1.entries[0].inaccessible);  // x : A
  CHECK_FALSE(r1.entries[1].inaccessible); // y :: A
  CHECK(r1.entries[2].inaccessible);  // u : Unit
  Ctx r2 = restrict_ctx(r1);
  REQUIRE(r2.entries.size() == r1.entries.size());
  for (size_t i = 0; i < r1.entries.size(); i++) {
    CHECK(r2.entries[i].inaccessible == r1.entries[i].inaccessible);
    CHECK(r2.entries[i].modality == r1.entries[i].modality);
  }
  Ctx empty;
  CHECK(restrict_ctx(empty).entries.empty());
}

TEST_CASE("restriction monotonicity: restricted-accepted implies accepted") {
  gen::World w;
  auto pool = w.grow(120);
  Ctx r = restrict_ctx(w.ctx);
  int tried = 0;
  for (auto& t : pool) {
    if (!w.well_typed(r, t.term, t.type)) continue;
    tried++;
    CHECK(w.well_typed(w.ctx, t.term, t.type));
  }
  CHECK(tried > 10);
}
