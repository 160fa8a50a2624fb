#ifndef CRISP_TESTS_GEN_HPP
#define CRISP_TESTS_GEN_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crisp/core_check.hpp"
#include "crisp/driver.hpp"
#include "crisp/elaborate.hpp"
#include "crisp/eval.hpp"
#include "crisp/pretty.hpp"

// Seeded generator of well-typed core terms over a small fixed signature,
// built bottom-up so every term carries its type. Terms are validated with
// the core checker as they are produced.
namespace gen {

using namespace crisp;

struct Typed {
  TermPtr term;
  ValuePtr type;
};

struct World {
  Signature sig;
  Eval ev{sig};
  Ctx ctx;
  std::mt19937 rng;

  explicit World(uint32_t seed = 0xC0FFEE) : rng(seed) {
    static const char* script =
        "postulate A : Set0\n"
        "postulate B : A -> Set0\n"
        "postulate a0 : A\n"
        "postulate a1 : A\n"
        "postulate f : (x : A) -> B x\n"
        "postulate g : A -> A\n"
        "postulate h : (x :: A) -> A\n"
        "postulate q : Unit -> A\n";
    auto decls = parse_module(tokenize(script));
    for (auto& d : decls) check_declaration(sig, ev, d, "<gen>");
    // context: x : A, y :: A, u : Unit
    ctx = ctx.extend("x", Modality::Ordinary, const_value("A"));
    ctx = ctx.extend("y", Modality::Crisp, const_value("A"));
    ctx = ctx.extend("u", Modality::Ordinary, v_unit());
  }

  // The constant itself as a value (e.g. the neutral `A`, usable as a type).
  ValuePtr const_value(const std::string& name) {
    Env env;
    return ev.eval(env, mk_const(name, {}));
  }

  // The declared type of a constant, as a value.
  ValuePtr const_type(const std::string& name) {
    const SigEntry* e = sig.find(name);
    if (!e) throw InternalError("const_type: no such constant " + name);
    Env env;
    return ev.eval(env, e->type);
  }

  size_t pick(size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); }
  bool coin() { return pick(2) == 0; }

  bool well_typed(const Ctx& c, const TermPtr& t, const ValuePtr& ty) {
    try {
      core_check(ev, c, t, ty);
      return true;
    } catch (const CheckError&) {
      return false;
    }
  }

  // Grows a pool of typed terms in `ctx` by random elimination/introduction.
  std::vector<Typed> grow(size_t target) {
    std::vector<Typed> pool;
    auto add = [&](TermPtr t, ValuePtr ty) {
      if (well_typed(ctx, t, ty)) pool.push_back({std::move(t), std::move(ty)});
    };
    // seeds: context variables and constants
    for (int i = 0; i < ctx.depth(); i++) {
      int idx = ctx.depth() - 1 - i;
      add(mk_var(idx), ctx.entries[(size_t)i].type);
    }
    for (auto& e : sig.entries()) {
      Env env;
      add(mk_const(e.name, {}), ev.eval(env, e.type));
    }
    add(mk_tt(), v_unit());

    while (pool.size() < target) {
      size_t n = pool.size();
      const Typed& t = pool[pick(n)];
      switch (pick(6)) {
        case 0: { // application
          if (t.type->kind != VKind::Pi) break;
          const Typed& s = pool[pick(n)];
          if (!ev.conv_type(ctx.depth(), s.type, t.type->a)) break;
          if (t.type->modality == Modality::Crisp &&
              !well_typed(restrict_ctx(ctx), s.term, t.type->a))
            break;
          ValuePtr rty = ev.apply_closure(t.type->clo, ev.eval(ctx.env, s.term));
          add(mk_app(t.term, s.term), rty);
          break;
        }
        case 1: { // refl over an existing term
          ValuePtr eq = v_eq(t.type, ev.eval(ctx.env, t.term), ev.eval(ctx.env, t.term));
          add(mk_refl(), eq);
          break;
        }
        case 2: { // non-dependent pair
          const Typed& s = pool[pick(n)];
          TermPtr tyA = ev.quote_type(ctx.depth(), t.type);
          TermPtr tyB = ev.quote_type(ctx.depth(), s.type);
          TermPtr sigma = mk_sigma("_", tyA, shift(tyB, 1));
          ValuePtr sv = ev.eval(ctx.env, sigma);
          add(mk_pair(t.term, s.term), sv);
          break;
        }
        case 3: { // projections
          if (t.type->kind != VKind::Sigma) break;
          add(mk_fst(t.term), t.type->a);
          add(mk_snd(t.term),
              ev.apply_closure(t.type->clo, ev.v_fst(ev.eval(ctx.env, t.term))));
          break;
        }
        case 4: { // constant-motive J-redex: J A x (\_. \_. T) z x refl
          if (t.type->kind == VKind::Pi || t.type->kind == VKind::Sigma) break;
          const Typed& s = pool[pick(n)];
          TermPtr A = ev.quote_type(ctx.depth(), s.type);
          TermPtr T = ev.quote_type(ctx.depth(), t.type);
          TermPtr motive = mk_lam("y2", mk_lam("p2", shift(T, 2)));
          TermPtr j = mk_j(false, A, s.term, motive, t.term, s.term, mk_refl());
          add(j, t.type);
          break;
        }
        case 5: { // eta-expansion of a function (either modality)
          if (t.type->kind != VKind::Pi) break;
          add(mk_lam("v", mk_app(shift(t.term, 1), mk_var(0))), t.type);
          break;
        }
      }
      if (n == pool.size() && pool.size() >= 4 && pick(4) == 0) {
        // avoid stalling: duplicate an element occasionally
        pool.push_back(pool[pick(n)]);
      }
    }
    return pool;
  }
};

} // namespace gen

#endif
