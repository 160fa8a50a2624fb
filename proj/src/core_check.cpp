#include "crisp/core_check.hpp"

namespace crisp {

namespace {

LevelExpr core_infer_sort(Eval& ev, const Ctx& ctx, const TermPtr& t) {
  ValuePtr s = core_infer(ev, ctx, t);
  if (s->kind != VKind::Universe)
    throw CheckError(DiagCode::Conv, "core: expected a type");
  return s->level;
}

ValuePtr core_infer_j(Eval& ev, const Ctx& ctx, const TermPtr& t, bool crisp) {
  Ctx rctx = crisp ? restrict_ctx(ctx) : ctx;
  core_infer_sort(ev, rctx, t->kids[0]);
  ValuePtr Av = ev.eval(ctx.env, t->kids[0]);
  core_check(ev, rctx, t->kids[1], Av);
  ValuePtr xv = ev.eval(ctx.env, t->kids[1]);
  ValuePtr mty = ev.motive_type(crisp, Av, xv);
  core_check(ev, ctx, t->kids[2], mty);
  ValuePtr Cv = ev.eval(ctx.env, t->kids[2]);
  core_check(ev, ctx, t->kids[3], ev.v_app(ev.v_app(Cv, xv), v_refl()));
  core_check(ev, rctx, t->kids[4], Av);
  ValuePtr yv = ev.eval(ctx.env, t->kids[4]);
  core_check(ev, rctx, t->kids[5], v_eq(Av, xv, yv));
  ValuePtr pv = ev.eval(ctx.env, t->kids[5]);
  return ev.v_app(ev.v_app(Cv, yv), pv);
}

} // namespace

ValuePtr core_infer(Eval& ev, const Ctx& ctx, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: {
      int n = ctx.depth();
      if (t->index < 0 || t->index >= n)
        throw CheckError(DiagCode::Scope, "core: variable index out of scope");
      const CtxEntry& e = ctx.entries[(size_t)(n - 1 - t->index)];
      if (e.inaccessible)
        throw CheckError(DiagCode::CrispVar,
                         "core: ordinary variable used in a restricted position");
      return e.type;
    }
    case TermKind::Universe: {
      LevelExpr l = level_instantiate(t->level, ctx.env.levels);
      return v_universe(level_suc(l));
    }
    case TermKind::UniverseAny:
      throw CheckError(DiagCode::Conv, "core: internal universe marker in stored term");
    case TermKind::Pi: {
      bool crisp = t->modality == Modality::Crisp;
      LevelExpr la = core_infer_sort(ev, crisp ? restrict_ctx(ctx) : ctx, t->kids[0]);
      Ctx ext = ctx.extend(t->name, t->modality, ev.eval(ctx.env, t->kids[0]));
      LevelExpr lb = core_infer_sort(ev, ext, t->kids[1]);
      return v_universe(level_max(la, lb));
    }
    case TermKind::Sigma: {
      LevelExpr la = core_infer_sort(ev, ctx, t->kids[0]);
      Ctx ext = ctx.extend(t->name, Modality::Ordinary, ev.eval(ctx.env, t->kids[0]));
      LevelExpr lb = core_infer_sort(ev, ext, t->kids[1]);
      return v_universe(level_max(la, lb));
    }
    case TermKind::App: {
      ValuePtr fty = core_infer(ev, ctx, t->kids[0]);
      if (fty->kind != VKind::Pi)
        throw CheckError(DiagCode::Conv, "core: application head is not a function");
      if (fty->modality == Modality::Crisp)
        core_check(ev, restrict_ctx(ctx), t->kids[1], fty->a);
      else
        core_check(ev, ctx, t->kids[1], fty->a);
      return ev.apply_closure(fty->clo, ev.eval(ctx.env, t->kids[1]));
    }
    case TermKind::Fst: {
      ValuePtr ty = core_infer(ev, ctx, t->kids[0]);
      if (ty->kind != VKind::Sigma)
        throw CheckError(DiagCode::Conv, "core: fst of a non-pair");
      return ty->a;
    }
    case TermKind::Snd: {
      ValuePtr ty = core_infer(ev, ctx, t->kids[0]);
      if (ty->kind != VKind::Sigma)
        throw CheckError(DiagCode::Conv, "core: snd of a non-pair");
      return ev.apply_closure(ty->clo, ev.v_fst(ev.eval(ctx.env, t->kids[0])));
    }
    case TermKind::Eq: {
      LevelExpr la = core_infer_sort(ev, ctx, t->kids[0]);
      ValuePtr Av = ev.eval(ctx.env, t->kids[0]);
      core_check(ev, ctx, t->kids[1], Av);
      core_check(ev, ctx, t->kids[2], Av);
      return v_universe(la);
    }
    case TermKind::J:
      return core_infer_j(ev, ctx, t, false);
    case TermKind::Jc:
      return core_infer_j(ev, ctx, t, true);
    case TermKind::Unit:
    case TermKind::Empty:
      return v_universe(LevelExpr::make_const(0));
    case TermKind::TT:
      return v_unit();
    case TermKind::Absurd: {
      core_infer_sort(ev, ctx, t->kids[0]);
      core_check(ev, ctx, t->kids[1], v_empty());
      return ev.eval(ctx.env, t->kids[0]);
    }
    case TermKind::Const: {
      const SigEntry* e = ev.sig().find(t->name);
      if (!e)
        throw CheckError(DiagCode::Scope, "core: unknown constant '" + t->name + "'");
      if (e->level_params.size() != t->levels.size())
        throw CheckError(DiagCode::Univ, "core: level arity mismatch for '" + t->name + "'");
      Env env;
      for (auto& l : t->levels)
        env.levels.push_back(level_instantiate(l, ctx.env.levels));
      return ev.eval(env, e->type);
    }
    case TermKind::Refl:
    case TermKind::Lam:
    case TermKind::Pair:
      throw CheckError(DiagCode::Conv, "core: term is not inferable");
  }
  throw InternalError("core_infer: bad kind");
}

void core_check(Eval& ev, const Ctx& ctx, const TermPtr& t, const ValuePtr& type) {
  switch (t->kind) {
    case TermKind::Lam: {
      if (type->kind != VKind::Pi)
        throw CheckError(DiagCode::Conv, "core: lambda against non-function type");
      Ctx ext = ctx.extend(t->name, type->modality, type->a);
      core_check(ev, ext, t->kids[0], ev.apply_closure(type->clo, ext.env.vals.back()));
      return;
    }
    case TermKind::Pair: {
      if (type->kind != VKind::Sigma)
        throw CheckError(DiagCode::Conv, "core: pair against non-pair type");
      core_check(ev, ctx, t->kids[0], type->a);
      ValuePtr av = ev.eval(ctx.env, t->kids[0]);
      core_check(ev, ctx, t->kids[1], ev.apply_closure(type->clo, av));
      return;
    }
    case TermKind::Refl: {
      if (type->kind != VKind::EqT)
        throw CheckError(DiagCode::Conv, "core: refl against non-equality type");
      if (!ev.convertible(ctx.depth(), type->a, type->b, type->c))
        throw CheckError(DiagCode::Conv, "core: refl sides are not convertible");
      return;
    }
    default: {
      ValuePtr ty = core_infer(ev, ctx, t);
      if (!ev.conv_type(ctx.depth(), ty, type)) {
        if (ty->kind == VKind::Universe && type->kind == VKind::Universe)
          throw CheckError(DiagCode::Univ, "core: universe level mismatch");
        throw CheckError(DiagCode::Conv, "core: type mismatch");
      }
      return;
    }
  }
}

void core_check_entry(Eval& ev, const SigEntry& entry) {
  Ctx ctx;
  ctx.level_names = entry.level_params;
  for (size_t i = 0; i < entry.level_params.size(); i++)
    ctx.env.levels.push_back(LevelExpr::make_var((uint32_t)i));
  core_infer_sort(ev, ctx, entry.type);
  if (entry.body) {
    ValuePtr ty = ev.eval(ctx.env, entry.type);
    core_check(ev, ctx, entry.body, ty);
  }
}

} // namespace crisp
