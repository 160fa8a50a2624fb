#include "crisp/elaborate.hpp"

#include <algorithm>

#include "crisp/pretty.hpp"

namespace crisp {

Ctx restrict_ctx(const Ctx& ctx) {
  Ctx c = ctx;
  for (auto& e : c.entries)
    if (e.modality == Modality::Ordinary) e.inaccessible = true;
  return c;
}

std::string context_snapshot(Eval& ev, const Ctx& ctx) {
  std::string s;
  std::vector<std::string> names;
  for (size_t i = 0; i < ctx.entries.size(); i++) {
    const CtxEntry& e = ctx.entries[i];
    if (!s.empty()) s += ", ";
    TermPtr ty = ev.quote_type((int)i, e.type);
    s += e.name;
    s += e.modality == Modality::Crisp ? " :: " : " : ";
    s += pretty_core(*ty, names, ctx.level_names);
    if (e.inaccessible) s += " (inaccessible)";
    names.push_back(e.name);
  }
  return s.empty() ? "(empty context)" : s;
}

namespace {

int lookup_entry(const Ctx& ctx, const std::string& name) {
  if (name == "_") return -1;
  for (int i = (int)ctx.entries.size() - 1; i >= 0; i--)
    if (ctx.entries[(size_t)i].name == name) return i;
  return -1;
}

} // namespace

void Elaborator::conv_fail(const Ctx& ctx, const RawTerm& at,
                           const ValuePtr& expected, const ValuePtr& got) {
  std::string exp = pretty_core(*ev_.quote_type(ctx.depth(), expected),
                                ctx.names(), ctx.level_names);
  std::string act = pretty_core(*ev_.quote_type(ctx.depth(), got), ctx.names(),
                                ctx.level_names);
  if (expected->kind == VKind::Universe && got->kind == VKind::Universe)
    throw CheckError(DiagCode::Univ,
                     "universe level mismatch: expected " + exp + ", got " + act,
                     at.span, context_snapshot(ev_, ctx));
  throw CheckError(DiagCode::Conv, "type mismatch: expected " + exp + ", got " + act,
                   at.span, context_snapshot(ev_, ctx));
}

LevelExpr Elaborator::elab_level(const Ctx& ctx, const RawTerm& t) {
  switch (t.kind) {
    case RawKind::LZero:
      return LevelExpr::make_const(0);
    case RawKind::LSuc:
      return level_suc(elab_level(ctx, t.kids[0]));
    case RawKind::LMax:
      return level_max(elab_level(ctx, t.kids[0]), elab_level(ctx, t.kids[1]));
    case RawKind::Var: {
      for (size_t i = 0; i < ctx.level_names.size(); i++)
        if (ctx.level_names[i] == t.name) return LevelExpr::make_var((uint32_t)i);
      if (lookup_entry(ctx, t.name) >= 0 || ev_.sig().find(t.name))
        throw CheckError(DiagCode::Univ,
                         "expected a universe level, found '" + t.name + "'",
                         t.span, context_snapshot(ev_, ctx));
      throw CheckError(DiagCode::Scope, "unbound level name '" + t.name + "'",
                       t.span, context_snapshot(ev_, ctx));
    }
    default:
      throw CheckError(DiagCode::Univ, "not a universe level expression", t.span,
                       context_snapshot(ev_, ctx));
  }
}

std::pair<TermPtr, LevelExpr> Elaborator::infer_type(const Ctx& ctx, const RawTerm& t) {
  auto [core, ty] = infer(ctx, t);
  if (ty->kind != VKind::Universe)
    throw CheckError(DiagCode::Conv,
                     "expected a type, but '" + pretty(t) + "' is not a universe element",
                     t.span, context_snapshot(ev_, ctx));
  return {core, ty->level};
}

std::pair<TermPtr, ValuePtr> Elaborator::infer_spine(const Ctx& ctx, const RawTerm& t) {
  // Flatten the application spine.
  std::vector<const RawTerm*> args;
  const RawTerm* head = &t;
  while (head->kind == RawKind::App) {
    args.push_back(&head->kids[1]);
    head = &head->kids[0];
  }
  std::reverse(args.begin(), args.end());

  TermPtr core;
  ValuePtr ty;
  size_t next = 0;

  if (head->kind == RawKind::Var && lookup_entry(ctx, head->name) < 0) {
    // Constant head: consume prenex level arguments first.
    const SigEntry* e = ev_.sig().find(head->name);
    if (!e) {
      if (poisoned_ && poisoned_->count(head->name))
        throw SkippedDependency{head->name};
      throw CheckError(DiagCode::Scope, "unbound name '" + head->name + "'",
                       head->span, context_snapshot(ev_, ctx));
    }
    size_t k = e->level_params.size();
    if (args.size() < k)
      throw CheckError(DiagCode::Univ,
                       "constant '" + head->name + "' expects " + std::to_string(k) +
                           " level argument(s)",
                       head->span, context_snapshot(ev_, ctx));
    std::vector<LevelExpr> levels;
    for (size_t i = 0; i < k; i++) levels.push_back(elab_level(ctx, *args[i]));
    next = k;
    core = mk_const(head->name, levels);
    Env env;
    env.levels = std::move(levels);
    ty = ev_.eval(env, e->type);
  } else {
    auto [c, t0] = infer(ctx, *head);
    core = c;
    ty = t0;
  }

  for (; next < args.size(); next++) {
    const RawTerm& arg = *args[next];
    if (ty->kind != VKind::Pi) {
      std::string got = pretty_core(*ev_.quote_type(ctx.depth(), ty), ctx.names(),
                                    ctx.level_names);
      throw CheckError(DiagCode::Conv,
                       "this term is applied to an argument but has type " + got,
                       arg.span, context_snapshot(ev_, ctx));
    }
    TermPtr ac = ty->modality == Modality::Crisp
                     ? check_crisp_argument(ctx, arg, ty->a)
                     : check(ctx, arg, ty->a);
    ValuePtr av = ev_.eval(ctx.env, ac);
    ty = ev_.apply_closure(ty->clo, av);
    core = mk_app(core, ac);
  }
  return {core, ty};
}

std::pair<TermPtr, ValuePtr> Elaborator::infer_j(const Ctx& ctx, const RawTerm& t,
                                                 bool crisp) {
  // J A x C z y p. For Jc, the subject family data A, x, y, p are crisp
  // premises (checked under restriction) and the motive binds crisp.
  Ctx rctx = crisp ? restrict_ctx(ctx) : ctx;
  auto [Acore, la] = infer_type(rctx, t.kids[0]);
  (void)la;
  ValuePtr Av = ev_.eval(ctx.env, Acore);
  TermPtr xcore = crisp ? check_crisp_argument(ctx, t.kids[1], Av)
                        : check(ctx, t.kids[1], Av);
  ValuePtr xv = ev_.eval(ctx.env, xcore);
  ValuePtr mty = ev_.motive_type(crisp, Av, xv);
  TermPtr Ccore = check(ctx, t.kids[2], mty);
  ValuePtr Cv = ev_.eval(ctx.env, Ccore);
  ValuePtr zty = ev_.v_app(ev_.v_app(Cv, xv), v_refl());
  TermPtr zcore = check(ctx, t.kids[3], zty);
  TermPtr ycore = crisp ? check_crisp_argument(ctx, t.kids[4], Av)
                        : check(ctx, t.kids[4], Av);
  ValuePtr yv = ev_.eval(ctx.env, ycore);
  ValuePtr pty = v_eq(Av, xv, yv);
  TermPtr pcore = crisp ? check_crisp_argument(ctx, t.kids[5], pty)
                        : check(ctx, t.kids[5], pty);
  ValuePtr pv = ev_.eval(ctx.env, pcore);
  ValuePtr rty = ev_.v_app(ev_.v_app(Cv, yv), pv);
  return {mk_j(crisp, Acore, xcore, Ccore, zcore, ycore, pcore), rty};
}

std::pair<TermPtr, ValuePtr> Elaborator::infer(const Ctx& ctx, const RawTerm& t) {
  switch (t.kind) {
    case RawKind::Var: {
      int i = lookup_entry(ctx, t.name);
      if (i >= 0) {
        const CtxEntry& e = ctx.entries[(size_t)i];
        if (e.inaccessible)
          throw CheckError(DiagCode::CrispVar,
                           "variable '" + t.name +
                               "' is ordinary, but only crisp variables may be used here",
                           t.span, context_snapshot(ev_, ctx));
        int index = ctx.depth() - 1 - i;
        return {mk_var(index, t.name), e.type};
      }
      if (const SigEntry* e = ev_.sig().find(t.name)) {
        if (!e->level_params.empty())
          throw CheckError(DiagCode::Univ,
                           "constant '" + t.name + "' expects " +
                               std::to_string(e->level_params.size()) +
                               " level argument(s)",
                           t.span, context_snapshot(ev_, ctx));
        Env env;
        return {mk_const(t.name, {}), ev_.eval(env, e->type)};
      }
      if (poisoned_ && poisoned_->count(t.name)) throw SkippedDependency{t.name};
      throw CheckError(DiagCode::Scope, "unbound name '" + t.name + "'", t.span,
                       context_snapshot(ev_, ctx));
    }
    case RawKind::App:
      return infer_spine(ctx, t);
    case RawKind::Universe: {
      LevelExpr l = t.universe_literal ? LevelExpr::make_const(t.universe_level)
                                       : elab_level(ctx, t.kids[0]);
      LevelExpr sort = level_suc(l);
      return {mk_universe(std::move(l)), v_universe(std::move(sort))};
    }
    case RawKind::Pi: {
      bool crisp = t.modality == Modality::Crisp;
      auto [dom, la] = infer_type(crisp ? restrict_ctx(ctx) : ctx, t.kids[0]);
      Ctx ext = ctx.extend(t.name, t.modality, ev_.eval(ctx.env, dom));
      auto [cod, lb] = infer_type(ext, t.kids[1]);
      return {mk_pi(t.modality, t.name, dom, cod),
              v_universe(level_max(la, lb))};
    }
    case RawKind::Sigma: {
      auto [dom, la] = infer_type(ctx, t.kids[0]);
      Ctx ext = ctx.extend(t.name, Modality::Ordinary, ev_.eval(ctx.env, dom));
      auto [cod, lb] = infer_type(ext, t.kids[1]);
      return {mk_sigma(t.name, dom, cod), v_universe(level_max(la, lb))};
    }
    case RawKind::Eq: {
      auto [Acore, la] = infer_type(ctx, t.kids[0]);
      ValuePtr Av = ev_.eval(ctx.env, Acore);
      TermPtr l = check(ctx, t.kids[1], Av);
      TermPtr r = check(ctx, t.kids[2], Av);
      return {mk_eq(Acore, l, r), v_universe(la)};
    }
    case RawKind::Fst: {
      auto [core, ty] = infer(ctx, t.kids[0]);
      if (ty->kind != VKind::Sigma)
        conv_fail(ctx, t.kids[0], v_sigma(v_universe_any(), const_closure(v_universe_any())), ty);
      return {mk_fst(core), ty->a};
    }
    case RawKind::Snd: {
      auto [core, ty] = infer(ctx, t.kids[0]);
      if (ty->kind != VKind::Sigma)
        conv_fail(ctx, t.kids[0], v_sigma(v_universe_any(), const_closure(v_universe_any())), ty);
      ValuePtr pv = ev_.eval(ctx.env, core);
      return {mk_snd(core), ev_.apply_closure(ty->clo, ev_.v_fst(pv))};
    }
    case RawKind::J:
      return infer_j(ctx, t, false);
    case RawKind::Jc:
      return infer_j(ctx, t, true);
    case RawKind::EmptyElim: {
      auto [Acore, la] = infer_type(ctx, t.kids[0]);
      (void)la;
      TermPtr e = check(ctx, t.kids[1], v_empty());
      return {mk_absurd(Acore, e), ev_.eval(ctx.env, Acore)};
    }
    case RawKind::UnitType:
      return {mk_unit(), v_universe(LevelExpr::make_const(0))};
    case RawKind::EmptyType:
      return {mk_empty(), v_universe(LevelExpr::make_const(0))};
    case RawKind::UnitVal:
      return {mk_tt(), v_unit()};
    case RawKind::Annotation: {
      auto [Tcore, la] = infer_type(ctx, t.kids[1]);
      (void)la;
      ValuePtr Tv = ev_.eval(ctx.env, Tcore);
      TermPtr c = check(ctx, t.kids[0], Tv);
      return {c, Tv};
    }
    case RawKind::Refl:
    case RawKind::Lam:
    case RawKind::Pair:
      throw CheckError(DiagCode::Conv,
                       "cannot infer a type for '" + pretty(t) +
                           "'; it only appears where the expected type is known",
                       t.span, context_snapshot(ev_, ctx));
    case RawKind::LZero:
    case RawKind::LSuc:
    case RawKind::LMax:
      throw CheckError(DiagCode::Univ,
                       "universe level expression used as a term", t.span,
                       context_snapshot(ev_, ctx));
  }
  throw InternalError("infer: bad raw kind");
}

TermPtr Elaborator::check(const Ctx& ctx, const RawTerm& t, const ValuePtr& type) {
  switch (t.kind) {
    case RawKind::Lam: {
      if (type->kind != VKind::Pi)
        throw CheckError(DiagCode::Conv,
                         "lambda checked against a non-function type: " +
                             pretty_core(*ev_.quote_type(ctx.depth(), type),
                                         ctx.names(), ctx.level_names),
                         t.span, context_snapshot(ev_, ctx));
      Ctx ext = ctx.extend(t.name, type->modality, type->a);
      ValuePtr fresh = ext.env.vals.back();
      TermPtr body = check(ext, t.kids[0], ev_.apply_closure(type->clo, fresh));
      return mk_lam(t.name, body);
    }
    case RawKind::Pair: {
      if (type->kind != VKind::Sigma)
        throw CheckError(DiagCode::Conv,
                         "pair checked against a non-pair type: " +
                             pretty_core(*ev_.quote_type(ctx.depth(), type),
                                         ctx.names(), ctx.level_names),
                         t.span, context_snapshot(ev_, ctx));
      TermPtr a = check(ctx, t.kids[0], type->a);
      ValuePtr av = ev_.eval(ctx.env, a);
      TermPtr b = check(ctx, t.kids[1], ev_.apply_closure(type->clo, av));
      return mk_pair(a, b);
    }
    case RawKind::Refl: {
      if (type->kind != VKind::EqT)
        throw CheckError(DiagCode::Conv, "refl checked against a non-equality type",
                         t.span, context_snapshot(ev_, ctx));
      if (!ev_.convertible(ctx.depth(), type->a, type->b, type->c)) {
        std::string l = pretty_core(*ev_.quote(ctx.depth(), type->a, type->b),
                                    ctx.names(), ctx.level_names);
        std::string r = pretty_core(*ev_.quote(ctx.depth(), type->a, type->c),
                                    ctx.names(), ctx.level_names);
        throw CheckError(DiagCode::Conv,
                         "refl: sides are not convertible: " + l + " vs " + r,
                         t.span, context_snapshot(ev_, ctx));
      }
      return mk_refl();
    }
    default: {
      auto [core, ty] = infer(ctx, t);
      if (!ev_.conv_type(ctx.depth(), ty, type)) conv_fail(ctx, t, type, ty);
      return core;
    }
  }
}

TermPtr Elaborator::check_crisp_argument(const Ctx& ctx, const RawTerm& t,
                                         const ValuePtr& type) {
  return check(restrict_ctx(ctx), t, type);
}

void check_declaration(Signature& sig, Eval& ev, const RawDecl& decl,
                       const std::string& origin_file,
                       const std::set<std::string>* poisoned) {
  if (decl.kind == DeclKind::Import)
    throw InternalError("check_declaration: import reached the checker");
  if (sig.find(decl.name))
    throw CheckError(DiagCode::Duplicate,
                     "duplicate declaration of '" + decl.name + "'", decl.span);

  Ctx ctx;
  ctx.level_names = decl.level_params;
  for (size_t i = 0; i < decl.level_params.size(); i++)
    ctx.env.levels.push_back(LevelExpr::make_var((uint32_t)i));

  Elaborator elab(ev, poisoned);
  auto [type_core, sort] = elab.infer_type(ctx, *decl.type);
  (void)sort;

  TermPtr body_core;
  if (decl.kind == DeclKind::Def) {
    ValuePtr type_value = ev.eval(ctx.env, type_core);
    body_core = elab.check(ctx, *decl.body, type_value);
  }

  SigEntry e;
  e.name = decl.name;
  e.level_params = decl.level_params;
  e.type = type_core;
  e.body = body_core;
  e.origin_file = origin_file;
  sig.add(std::move(e));
}

} // namespace crisp
