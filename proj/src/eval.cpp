#include "crisp/eval.hpp"

#include "crisp/diagnostics.hpp"

namespace crisp {

namespace {
ValuePtr mk(Value&& v) { return std::make_shared<Value>(std::move(v)); }
} // namespace

ValuePtr v_universe(LevelExpr l) {
  Value v{VKind::Universe};
  v.level = std::move(l);
  return mk(std::move(v));
}
ValuePtr v_universe_any() { return mk(Value{VKind::UniverseAny}); }
ValuePtr v_pi(Modality m, ValuePtr dom, Closure cod) {
  Value v{VKind::Pi};
  v.modality = m;
  v.a = std::move(dom);
  v.clo = std::move(cod);
  return mk(std::move(v));
}
ValuePtr v_sigma(ValuePtr dom, Closure cod) {
  Value v{VKind::Sigma};
  v.a = std::move(dom);
  v.clo = std::move(cod);
  return mk(std::move(v));
}
ValuePtr v_eq(ValuePtr A, ValuePtr l, ValuePtr r) {
  Value v{VKind::EqT};
  v.a = std::move(A);
  v.b = std::move(l);
  v.c = std::move(r);
  return mk(std::move(v));
}
ValuePtr v_lam(Closure body) {
  Value v{VKind::Lam};
  v.clo = std::move(body);
  return mk(std::move(v));
}
ValuePtr v_pair(ValuePtr a, ValuePtr b) {
  Value v{VKind::Pair};
  v.a = std::move(a);
  v.b = std::move(b);
  return mk(std::move(v));
}
ValuePtr v_refl() { return mk(Value{VKind::Refl}); }
ValuePtr v_unit() { return mk(Value{VKind::Unit}); }
ValuePtr v_tt() { return mk(Value{VKind::TT}); }
ValuePtr v_empty() { return mk(Value{VKind::Empty}); }
ValuePtr v_var(int level, ValuePtr type) {
  Value v{VKind::Neutral};
  v.neutral.is_var = true;
  v.neutral.var_level = level;
  v.neutral.head_type = std::move(type);
  return mk(std::move(v));
}
ValuePtr v_const(std::string name, std::vector<LevelExpr> levels, ValuePtr type) {
  Value v{VKind::Neutral};
  v.neutral.is_var = false;
  v.neutral.const_name = std::move(name);
  v.neutral.const_levels = std::move(levels);
  v.neutral.head_type = std::move(type);
  return mk(std::move(v));
}

Closure const_closure(ValuePtr v) {
  Closure c;
  c.constant = std::move(v);
  return c;
}

ValuePtr Eval::apply_closure(const Closure& c, const ValuePtr& v) {
  if (c.constant) return c.constant;
  Env e = c.env;
  e.vals.push_back(v);
  return eval(e, c.body);
}

ValuePtr Eval::v_app(const ValuePtr& f, const ValuePtr& a) {
  if (f->kind == VKind::Lam) return apply_closure(f->clo, a);
  if (f->kind == VKind::Neutral) {
    Value v = *f;
    v.neutral.spine.push_back(SpineEntry{SpineEntry::App, {a}, false});
    return mk(std::move(v));
  }
  throw InternalError("v_app: head is not a function value");
}

ValuePtr Eval::v_fst(const ValuePtr& p) {
  if (p->kind == VKind::Pair) return p->a;
  if (p->kind == VKind::Neutral) {
    Value v = *p;
    v.neutral.spine.push_back(SpineEntry{SpineEntry::Fst, {}, false});
    return mk(std::move(v));
  }
  throw InternalError("v_fst: not a pair value");
}

ValuePtr Eval::v_snd(const ValuePtr& p) {
  if (p->kind == VKind::Pair) return p->b;
  if (p->kind == VKind::Neutral) {
    Value v = *p;
    v.neutral.spine.push_back(SpineEntry{SpineEntry::Snd, {}, false});
    return mk(std::move(v));
  }
  throw InternalError("v_snd: not a pair value");
}

ValuePtr Eval::v_j(bool crisp, const ValuePtr& A, const ValuePtr& x, const ValuePtr& C,
                   const ValuePtr& z, const ValuePtr& y, const ValuePtr& p) {
  if (p->kind == VKind::Refl) return z;
  if (p->kind == VKind::Neutral) {
    Value v = *p;
    v.neutral.spine.push_back(SpineEntry{SpineEntry::JElim, {A, x, C, z, y}, crisp});
    return mk(std::move(v));
  }
  throw InternalError("v_j: path is neither refl nor neutral");
}

ValuePtr Eval::v_absurd(const ValuePtr& A, const ValuePtr& e) {
  if (e->kind == VKind::Neutral) {
    Value v = *e;
    v.neutral.spine.push_back(SpineEntry{SpineEntry::AbsurdElim, {A}, false});
    return mk(std::move(v));
  }
  throw InternalError("v_absurd: eliminating a non-neutral of Empty");
}

ValuePtr Eval::motive_type(bool crisp, const ValuePtr& A, const ValuePtr& x) {
  Modality m = crisp ? Modality::Crisp : Modality::Ordinary;
  // (y [::] A) -> (p [::] Eq A x y) -> Set _, with A, x fed via the env.
  TermPtr tmpl = mk_pi(
      m, "y", mk_var(1),
      mk_pi(m, "p", mk_eq(mk_var(2), mk_var(1), mk_var(0)), mk_universe_any()));
  Env env;
  env.vals = {A, x};
  return eval(env, tmpl);
}

ValuePtr Eval::eval_const(const std::string& name, std::vector<LevelExpr> levels) {
  std::string key = name;
  for (auto& l : levels) key += "#" + l.to_string();
  auto it = unfold_memo_.find(key);
  if (it != unfold_memo_.end()) return it->second;

  const SigEntry* e = sig_.find(name);
  if (!e) throw InternalError("eval: unknown constant " + name);
  if (e->level_params.size() != levels.size())
    throw InternalError("eval: level arity mismatch for " + name);

  ValuePtr result;
  Env env;
  env.levels = levels;
  if (e->body) {
    result = eval(env, e->body);
  } else {
    ValuePtr ty = eval(env, e->type);
    result = v_const(name, std::move(levels), std::move(ty));
  }
  unfold_memo_[key] = result;
  return result;
}

ValuePtr Eval::eval(const Env& env, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: {
      size_t n = env.vals.size();
      if (t->index < 0 || (size_t)t->index >= n)
        throw InternalError("eval: variable index out of range");
      return env.vals[n - 1 - (size_t)t->index];
    }
    case TermKind::Universe:
      return v_universe(level_instantiate(t->level, env.levels));
    case TermKind::UniverseAny:
      return v_universe_any();
    case TermKind::Pi:
      return v_pi(t->modality, eval(env, t->kids[0]),
                  Closure{env, t->kids[1], nullptr});
    case TermKind::Lam:
      return v_lam(Closure{env, t->kids[0], nullptr});
    case TermKind::App:
      return v_app(eval(env, t->kids[0]), eval(env, t->kids[1]));
    case TermKind::Sigma:
      return v_sigma(eval(env, t->kids[0]), Closure{env, t->kids[1], nullptr});
    case TermKind::Pair:
      return v_pair(eval(env, t->kids[0]), eval(env, t->kids[1]));
    case TermKind::Fst:
      return v_fst(eval(env, t->kids[0]));
    case TermKind::Snd:
      return v_snd(eval(env, t->kids[0]));
    case TermKind::Eq:
      return v_eq(eval(env, t->kids[0]), eval(env, t->kids[1]), eval(env, t->kids[2]));
    case TermKind::Refl:
      return v_refl();
    case TermKind::J:
    case TermKind::Jc:
      return v_j(t->kind == TermKind::Jc, eval(env, t->kids[0]), eval(env, t->kids[1]),
                 eval(env, t->kids[2]), eval(env, t->kids[3]), eval(env, t->kids[4]),
                 eval(env, t->kids[5]));
    case TermKind::Unit:
      return v_unit();
    case TermKind::TT:
      return v_tt();
    case TermKind::Empty:
      return v_empty();
    case TermKind::Absurd:
      return v_absurd(eval(env, t->kids[0]), eval(env, t->kids[1]));
    case TermKind::Const: {
      std::vector<LevelExpr> ls;
      ls.reserve(t->levels.size());
      for (auto& l : t->levels) ls.push_back(level_instantiate(l, env.levels));
      return eval_const(t->name, std::move(ls));
    }
  }
  throw InternalError("eval: bad term kind");
}

// ---------------------------------------------------------------------------
// Conversion

bool Eval::conv_neutral(int depth, const VNeutral& x, const VNeutral& y) {
  if (x.is_var != y.is_var) return false;
  if (x.is_var) {
    if (x.var_level != y.var_level) return false;
  } else {
    if (x.const_name != y.const_name) return false;
    if (x.const_levels.size() != y.const_levels.size()) return false;
    for (size_t i = 0; i < x.const_levels.size(); i++)
      if (!level_eq(x.const_levels[i], y.const_levels[i])) return false;
  }
  if (x.spine.size() != y.spine.size()) return false;

  ValuePtr running = x.head_type;
  Value head = Value{VKind::Neutral};
  head.neutral = x;
  head.neutral.spine.clear();
  ValuePtr acc = mk(std::move(head));

  for (size_t i = 0; i < x.spine.size(); i++) {
    const SpineEntry& ex = x.spine[i];
    const SpineEntry& ey = y.spine[i];
    if (ex.kind != ey.kind) return false;
    switch (ex.kind) {
      case SpineEntry::App: {
        if (running->kind != VKind::Pi)
          throw InternalError("conv: application spine on non-Pi type");
        if (!convertible(depth, running->a, ex.args[0], ey.args[0])) return false;
        running = apply_closure(running->clo, ex.args[0]);
        acc = v_app(acc, ex.args[0]);
        break;
      }
      case SpineEntry::Fst: {
        if (running->kind != VKind::Sigma)
          throw InternalError("conv: fst spine on non-Sigma type");
        running = running->a;
        acc = v_fst(acc);
        break;
      }
      case SpineEntry::Snd: {
        if (running->kind != VKind::Sigma)
          throw InternalError("conv: snd spine on non-Sigma type");
        running = apply_closure(running->clo, v_fst(acc));
        acc = v_snd(acc);
        break;
      }
      case SpineEntry::JElim: {
        if (ex.crisp_j != ey.crisp_j) return false;
        const ValuePtr& A = ex.args[0];
        const ValuePtr& xx = ex.args[1];
        const ValuePtr& C = ex.args[2];
        const ValuePtr& z = ex.args[3];
        const ValuePtr& yy = ex.args[4];
        if (!conv_type(depth, A, ey.args[0])) return false;
        if (!convertible(depth, A, xx, ey.args[1])) return false;
        ValuePtr mty = motive_type(ex.crisp_j, A, xx);
        if (!convertible(depth, mty, C, ey.args[2])) return false;
        ValuePtr zty = v_app(v_app(C, xx), v_refl());
        if (!convertible(depth, zty, z, ey.args[3])) return false;
        if (!convertible(depth, A, yy, ey.args[4])) return false;
        ValuePtr path = acc;
        running = v_app(v_app(C, yy), path);
        acc = v_j(ex.crisp_j, A, xx, C, z, yy, path);
        break;
      }
      case SpineEntry::AbsurdElim: {
        if (!conv_type(depth, ex.args[0], ey.args[0])) return false;
        running = ex.args[0];
        acc = v_absurd(ex.args[0], acc);
        break;
      }
    }
  }
  return true;
}

bool Eval::conv_type(int depth, const ValuePtr& A, const ValuePtr& B) {
  if (A->kind == VKind::UniverseAny || B->kind == VKind::UniverseAny) {
    auto ok = [](const ValuePtr& v) {
      return v->kind == VKind::Universe || v->kind == VKind::UniverseAny;
    };
    return ok(A) && ok(B);
  }
  if (A->kind != B->kind) return false;
  switch (A->kind) {
    case VKind::Universe:
      return level_eq(A->level, B->level);
    case VKind::Pi: {
      if (A->modality != B->modality) return false;
      if (!conv_type(depth, A->a, B->a)) return false;
      ValuePtr fresh = v_var(depth, A->a);
      return conv_type(depth + 1, apply_closure(A->clo, fresh),
                       apply_closure(B->clo, fresh));
    }
    case VKind::Sigma: {
      if (!conv_type(depth, A->a, B->a)) return false;
      ValuePtr fresh = v_var(depth, A->a);
      return conv_type(depth + 1, apply_closure(A->clo, fresh),
                       apply_closure(B->clo, fresh));
    }
    case VKind::EqT:
      return conv_type(depth, A->a, B->a) && convertible(depth, A->a, A->b, B->b) &&
             convertible(depth, A->a, A->c, B->c);
    case VKind::Unit:
    case VKind::Empty:
      return true;
    case VKind::Neutral:
      return conv_neutral(depth, A->neutral, B->neutral);
    default:
      return false;
  }
}

bool Eval::convertible(int depth, const ValuePtr& type, const ValuePtr& a,
                       const ValuePtr& b) {
  switch (type->kind) {
    case VKind::Pi: {
      ValuePtr fresh = v_var(depth, type->a);
      return convertible(depth + 1, apply_closure(type->clo, fresh),
                         v_app(a, fresh), v_app(b, fresh));
    }
    case VKind::Sigma: {
      ValuePtr fa = v_fst(a), fb = v_fst(b);
      if (!convertible(depth, type->a, fa, fb)) return false;
      return convertible(depth, apply_closure(type->clo, fa), v_snd(a), v_snd(b));
    }
    case VKind::Unit:
      return true; // eta for Unit
    case VKind::Universe:
    case VKind::UniverseAny:
      return conv_type(depth, a, b);
    case VKind::EqT: {
      if (a->kind == VKind::Refl && b->kind == VKind::Refl) return true;
      if (a->kind == VKind::Neutral && b->kind == VKind::Neutral)
        return conv_neutral(depth, a->neutral, b->neutral);
      return false;
    }
    case VKind::Empty:
    case VKind::Neutral: {
      if (a->kind == VKind::Neutral && b->kind == VKind::Neutral)
        return conv_neutral(depth, a->neutral, b->neutral);
      return false;
    }
    default:
      throw InternalError("convertible: malformed type value");
  }
}

// ---------------------------------------------------------------------------
// Readback

TermPtr Eval::quote_neutral(int depth, const VNeutral& n) {
  TermPtr term;
  if (n.is_var) {
    int idx = depth - 1 - n.var_level;
    if (idx < 0) throw InternalError("quote: variable level out of scope");
    term = mk_var(idx);
  } else {
    term = mk_const(n.const_name, n.const_levels);
  }
  ValuePtr running = n.head_type;
  Value head = Value{VKind::Neutral};
  head.neutral = n;
  head.neutral.spine.clear();
  ValuePtr acc = mk(std::move(head));

  for (const SpineEntry& e : n.spine) {
    switch (e.kind) {
      case SpineEntry::App: {
        if (running->kind != VKind::Pi)
          throw InternalError("quote: application spine on non-Pi type");
        TermPtr arg = quote(depth, running->a, e.args[0]);
        term = mk_app(term, arg);
        running = apply_closure(running->clo, e.args[0]);
        acc = v_app(acc, e.args[0]);
        break;
      }
      case SpineEntry::Fst:
        term = mk_fst(term);
        running = running->a;
        acc = v_fst(acc);
        break;
      case SpineEntry::Snd:
        if (running->kind != VKind::Sigma)
          throw InternalError("quote: snd spine on non-Sigma type");
        running = apply_closure(running->clo, v_fst(acc));
        term = mk_snd(term);
        acc = v_snd(acc);
        break;
      case SpineEntry::JElim: {
        const ValuePtr& A = e.args[0];
        const ValuePtr& x = e.args[1];
        const ValuePtr& C = e.args[2];
        const ValuePtr& z = e.args[3];
        const ValuePtr& y = e.args[4];
        TermPtr At = quote_type(depth, A);
        TermPtr xt = quote(depth, A, x);
        TermPtr Ct = quote(depth, motive_type(e.crisp_j, A, x), C);
        TermPtr zt = quote(depth, v_app(v_app(C, x), v_refl()), z);
        TermPtr yt = quote(depth, A, y);
        ValuePtr path = acc;
        term = mk_j(e.crisp_j, At, xt, Ct, zt, yt, term);
        running = v_app(v_app(C, y), path);
        acc = v_j(e.crisp_j, A, x, C, z, y, path);
        break;
      }
      case SpineEntry::AbsurdElim: {
        term = mk_absurd(quote_type(depth, e.args[0]), term);
        running = e.args[0];
        acc = v_absurd(e.args[0], acc);
        break;
      }
    }
  }
  return term;
}

TermPtr Eval::quote_type(int depth, const ValuePtr& A) {
  switch (A->kind) {
    case VKind::Universe:
      return mk_universe(A->level);
    case VKind::UniverseAny:
      return mk_universe_any();
    case VKind::Pi: {
      ValuePtr fresh = v_var(depth, A->a);
      return mk_pi(A->modality, "x", quote_type(depth, A->a),
                   quote_type(depth + 1, apply_closure(A->clo, fresh)));
    }
    case VKind::Sigma: {
      ValuePtr fresh = v_var(depth, A->a);
      return mk_sigma("x", quote_type(depth, A->a),
                      quote_type(depth + 1, apply_closure(A->clo, fresh)));
    }
    case VKind::EqT:
      return mk_eq(quote_type(depth, A->a), quote(depth, A->a, A->b),
                   quote(depth, A->a, A->c));
    case VKind::Unit:
      return mk_unit();
    case VKind::Empty:
      return mk_empty();
    case VKind::Neutral:
      return quote_neutral(depth, A->neutral);
    default:
      throw InternalError("quote_type: not a type value");
  }
}

TermPtr Eval::quote(int depth, const ValuePtr& type, const ValuePtr& v) {
  switch (type->kind) {
    case VKind::Pi: {
      ValuePtr fresh = v_var(depth, type->a);
      TermPtr body =
          quote(depth + 1, apply_closure(type->clo, fresh), v_app(v, fresh));
      return mk_lam("x", body);
    }
    case VKind::Sigma: {
      ValuePtr fa = v_fst(v);
      TermPtr a = quote(depth, type->a, fa);
      TermPtr b = quote(depth, apply_closure(type->clo, fa), v_snd(v));
      return mk_pair(a, b);
    }
    case VKind::Unit:
      return mk_tt();
    case VKind::Universe:
    case VKind::UniverseAny:
      return quote_type(depth, v);
    case VKind::EqT:
      if (v->kind == VKind::Refl) return mk_refl();
      if (v->kind == VKind::Neutral) return quote_neutral(depth, v->neutral);
      throw InternalError("quote: malformed equality proof value");
    case VKind::Empty:
    case VKind::Neutral:
      if (v->kind == VKind::Neutral) return quote_neutral(depth, v->neutral);
      throw InternalError("quote: non-neutral at stuck type");
    default:
      throw InternalError("quote: malformed type value");
  }
}

} // namespace crisp
