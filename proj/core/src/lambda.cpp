#include "ccc/lambda.hpp"

#include <utility>

#include "ccc/text.hpp"

namespace ccc {

namespace {

std::shared_ptr<LambdaTerm> make_lam(LamKind kind) {
  auto n = std::make_shared<LambdaTerm>();
  n->kind = kind;
  return n;
}

}  // namespace

LambdaPtr lam_var(int level) {
  auto n = make_lam(LamKind::Var);
  n->level = level;
  return n;
}

LambdaPtr lam_abs(ObjectPtr dom, LambdaPtr body) {
  auto n = make_lam(LamKind::Abs);
  n->type = std::move(dom);
  n->t1 = std::move(body);
  return n;
}

LambdaPtr lam_app(LambdaPtr fun, LambdaPtr arg) {
  auto n = make_lam(LamKind::App);
  n->t1 = std::move(fun);
  n->t2 = std::move(arg);
  return n;
}

LambdaPtr lam_pair(LambdaPtr fst, LambdaPtr snd) {
  auto n = make_lam(LamKind::Pair);
  n->t1 = std::move(fst);
  n->t2 = std::move(snd);
  return n;
}

LambdaPtr lam_fst(LambdaPtr of) {
  auto n = make_lam(LamKind::Fst);
  n->t1 = std::move(of);
  return n;
}

LambdaPtr lam_snd(LambdaPtr of) {
  auto n = make_lam(LamKind::Snd);
  n->t1 = std::move(of);
  return n;
}

LambdaPtr lam_unit() {
  static const LambdaPtr u = make_lam(LamKind::Unit);
  return u;
}

LambdaPtr lam_const(std::string name, ObjectPtr type) {
  auto n = make_lam(LamKind::Const);
  n->name = std::move(name);
  n->type = std::move(type);
  return n;
}

bool lambda_equal(const LambdaPtr& a, const LambdaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->level != b->level || a->name != b->name) return false;
  if ((a->type == nullptr) != (b->type == nullptr)) return false;
  if (a->type && !obj_equal(a->type, b->type)) return false;
  if ((a->t1 == nullptr) != (b->t1 == nullptr)) return false;
  if ((a->t2 == nullptr) != (b->t2 == nullptr)) return false;
  if (a->t1 && !lambda_equal(a->t1, b->t1)) return false;
  if (a->t2 && !lambda_equal(a->t2, b->t2)) return false;
  return true;
}

namespace {

ObjectPtr lam_type_rec(const LambdaPtr& t, std::vector<ObjectPtr>& ctx) {
  switch (t->kind) {
    case LamKind::Var:
      if (t->level < 0 || t->level >= static_cast<int>(ctx.size()))
        throw TypeMismatch("unbound variable level " + std::to_string(t->level));
      return ctx[t->level];
    case LamKind::Abs: {
      ctx.push_back(t->type);
      ObjectPtr body = lam_type_rec(t->t1, ctx);
      ctx.pop_back();
      return exponential(t->type, body);
    }
    case LamKind::App: {
      ObjectPtr fun = lam_type_rec(t->t1, ctx);
      ObjectPtr arg = lam_type_rec(t->t2, ctx);
      if (fun->kind != ObjKind::Exponential || !obj_equal(fun->left, arg))
        throw TypeMismatch("cannot apply '" + print_lambda(t->t1) + "' : " + print_object(fun) +
                           " to '" + print_lambda(t->t2) + "' : " + print_object(arg));
      return fun->right;
    }
    case LamKind::Pair:
      return product(lam_type_rec(t->t1, ctx), lam_type_rec(t->t2, ctx));
    case LamKind::Fst: {
      ObjectPtr p = lam_type_rec(t->t1, ctx);
      if (p->kind != ObjKind::Product)
        throw TypeMismatch("fst of non-pair type " + print_object(p));
      return p->left;
    }
    case LamKind::Snd: {
      ObjectPtr p = lam_type_rec(t->t1, ctx);
      if (p->kind != ObjKind::Product)
        throw TypeMismatch("snd of non-pair type " + print_object(p));
      return p->right;
    }
    case LamKind::Unit:
      return terminal();
    case LamKind::Const:
      return t->type;
  }
  throw InternalError("lambda_type: unhandled kind");
}

}  // namespace

ObjectPtr lambda_type(const LambdaPtr& t, std::vector<ObjectPtr> ctx) {
  if (!t) throw InternalError("lambda_type: null term");
  return lam_type_rec(t, ctx);
}

// ---------------------------------------------------------------------------
// Normalization by evaluation.
//
// Terms evaluate into a semantic domain of closures, tuples, the unit value
// and stuck (neutral) spines; readback is directed by the type, which yields
// eta-long output and collapses everything of terminal type to Unit in one
// pass. Variable levels in readback are the binder depth of the output term,
// so the result is canonically numbered.

namespace {

struct Value;
struct Neutral;
using ValuePtr = std::shared_ptr<const Value>;
using NeutralPtr = std::shared_ptr<const Neutral>;

enum class NeKind { Var, Const, App, Fst, Snd };

struct Neutral {
  NeKind kind = NeKind::Var;
  int level = 0;       // Var
  std::string name;    // Const
  ObjectPtr cty;       // Const: its simple type
  NeutralPtr head;     // App/Fst/Snd
  ValuePtr arg;        // App
  ObjectPtr arg_type;  // App
};

enum class VKind { Closure, Tuple, UnitV, Stuck };

struct Value {
  VKind kind = VKind::UnitV;
  // Closure
  std::vector<ValuePtr> env;
  LambdaPtr body;
  // Tuple
  ValuePtr v1, v2;
  // Stuck
  NeutralPtr ne;
  ObjectPtr ne_type;  // type of the whole neutral value
};

ValuePtr v_unit() {
  static const ValuePtr u = std::make_shared<Value>();
  return u;
}

ValuePtr v_closure(std::vector<ValuePtr> env, LambdaPtr body) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Closure;
  v->env = std::move(env);
  v->body = std::move(body);
  return v;
}

ValuePtr v_tuple(ValuePtr a, ValuePtr b) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Tuple;
  v->v1 = std::move(a);
  v->v2 = std::move(b);
  return v;
}

ValuePtr v_stuck(NeutralPtr ne, ObjectPtr type) {
  auto v = std::make_shared<Value>();
  v->kind = VKind::Stuck;
  v->ne = std::move(ne);
  v->ne_type = std::move(type);
  return v;
}

NeutralPtr ne_var(int level) {
  auto n = std::make_shared<Neutral>();
  n->kind = NeKind::Var;
  n->level = level;
  return n;
}

NeutralPtr ne_const(std::string name, ObjectPtr type) {
  auto n = std::make_shared<Neutral>();
  n->kind = NeKind::Const;
  n->name = std::move(name);
  n->cty = std::move(type);
  return n;
}

NeutralPtr ne_app(NeutralPtr head, ValuePtr arg, ObjectPtr arg_type) {
  auto n = std::make_shared<Neutral>();
  n->kind = NeKind::App;
  n->head = std::move(head);
  n->arg = std::move(arg);
  n->arg_type = std::move(arg_type);
  return n;
}

NeutralPtr ne_proj(NeKind which, NeutralPtr head) {
  auto n = std::make_shared<Neutral>();
  n->kind = which;
  n->head = std::move(head);
  return n;
}

ValuePtr eval_term(const LambdaPtr& t, const std::vector<ValuePtr>& env);

ValuePtr v_apply(const ValuePtr& f, const ValuePtr& a) {
  if (f->kind == VKind::Closure) {
    std::vector<ValuePtr> env = f->env;
    env.push_back(a);
    return eval_term(f->body, env);
  }
  if (f->kind == VKind::Stuck && f->ne_type->kind == ObjKind::Exponential)
    return v_stuck(ne_app(f->ne, a, f->ne_type->left), f->ne_type->right);
  throw InternalError("nf: applying a non-function value");
}

ValuePtr v_fst(const ValuePtr& v) {
  if (v->kind == VKind::Tuple) return v->v1;
  if (v->kind == VKind::Stuck && v->ne_type->kind == ObjKind::Product)
    return v_stuck(ne_proj(NeKind::Fst, v->ne), v->ne_type->left);
  throw InternalError("nf: fst of a non-pair value");
}

ValuePtr v_snd(const ValuePtr& v) {
  if (v->kind == VKind::Tuple) return v->v2;
  if (v->kind == VKind::Stuck && v->ne_type->kind == ObjKind::Product)
    return v_stuck(ne_proj(NeKind::Snd, v->ne), v->ne_type->right);
  throw InternalError("nf: snd of a non-pair value");
}

ValuePtr eval_term(const LambdaPtr& t, const std::vector<ValuePtr>& env) {
  switch (t->kind) {
    case LamKind::Var:
      if (t->level < 0 || t->level >= static_cast<int>(env.size()))
        throw InternalError("nf: unbound variable during evaluation");
      return env[t->level];
    case LamKind::Abs:
      return v_closure(env, t->t1);
    case LamKind::App:
      return v_apply(eval_term(t->t1, env), eval_term(t->t2, env));
    case LamKind::Pair:
      return v_tuple(eval_term(t->t1, env), eval_term(t->t2, env));
    case LamKind::Fst:
      return v_fst(eval_term(t->t1, env));
    case LamKind::Snd:
      return v_snd(eval_term(t->t1, env));
    case LamKind::Unit:
      return v_unit();
    case LamKind::Const:
      return v_stuck(ne_const(t->name, t->type), t->type);
  }
  throw InternalError("nf: unhandled kind during evaluation");
}

LambdaPtr reify(const ObjectPtr& type, const ValuePtr& v, int depth);

LambdaPtr reify_neutral(const NeutralPtr& ne, int depth) {
  switch (ne->kind) {
    case NeKind::Var:
      return lam_var(ne->level);
    case NeKind::Const:
      return lam_const(ne->name, ne->cty);
    case NeKind::App:
      return lam_app(reify_neutral(ne->head, depth), reify(ne->arg_type, ne->arg, depth));
    case NeKind::Fst:
      return lam_fst(reify_neutral(ne->head, depth));
    case NeKind::Snd:
      return lam_snd(reify_neutral(ne->head, depth));
  }
  throw InternalError("nf: unhandled neutral kind");
}

LambdaPtr reify(const ObjectPtr& type, const ValuePtr& v, int depth) {
  switch (type->kind) {
    case ObjKind::Terminal:
      return lam_unit();
    case ObjKind::Exponential: {
      ValuePtr fresh = v_stuck(ne_var(depth), type->left);
      return lam_abs(type->left, reify(type->right, v_apply(v, fresh), depth + 1));
    }
    case ObjKind::Product:
      return lam_pair(reify(type->left, v_fst(v), depth), reify(type->right, v_snd(v), depth));
    case ObjKind::Atom:
      if (v->kind != VKind::Stuck)
        throw InternalError("nf: non-neutral value at atomic type " + print_object(type));
      return reify_neutral(v->ne, depth);
  }
  throw InternalError("nf: unhandled type kind");
}

}  // namespace

LambdaPtr nf(const LambdaPtr& t) {
  ObjectPtr ty = lambda_type(t);
  return reify(ty, eval_term(t, {}), 0);
}

namespace {

// Spine check for the normal-form predicate; returns the synthesized type of
// a neutral term, or nullptr when the term is not a neutral spine.
ObjectPtr neutral_type(const LambdaPtr& t, std::vector<ObjectPtr>& ctx);

bool normal_at(const LambdaPtr& t, const ObjectPtr& type, std::vector<ObjectPtr>& ctx) {
  switch (type->kind) {
    case ObjKind::Terminal:
      return t->kind == LamKind::Unit;
    case ObjKind::Exponential: {
      if (t->kind != LamKind::Abs || !obj_equal(t->type, type->left)) return false;
      ctx.push_back(t->type);
      bool ok = normal_at(t->t1, type->right, ctx);
      ctx.pop_back();
      return ok;
    }
    case ObjKind::Product:
      return t->kind == LamKind::Pair && normal_at(t->t1, type->left, ctx) &&
             normal_at(t->t2, type->right, ctx);
    case ObjKind::Atom: {
      ObjectPtr nt = neutral_type(t, ctx);
      return nt != nullptr && obj_equal(nt, type);
    }
  }
  return false;
}

ObjectPtr neutral_type(const LambdaPtr& t, std::vector<ObjectPtr>& ctx) {
  switch (t->kind) {
    case LamKind::Var:
      if (t->level < 0 || t->level >= static_cast<int>(ctx.size())) return nullptr;
      return ctx[t->level];
    case LamKind::Const:
      return t->type;
    case LamKind::App: {
      ObjectPtr fun = neutral_type(t->t1, ctx);
      if (!fun || fun->kind != ObjKind::Exponential) return nullptr;
      if (!normal_at(t->t2, fun->left, ctx)) return nullptr;
      return fun->right;
    }
    case LamKind::Fst: {
      ObjectPtr p = neutral_type(t->t1, ctx);
      return p && p->kind == ObjKind::Product ? p->left : nullptr;
    }
    case LamKind::Snd: {
      ObjectPtr p = neutral_type(t->t1, ctx);
      return p && p->kind == ObjKind::Product ? p->right : nullptr;
    }
    default:
      return nullptr;
  }
}

}  // namespace

bool is_normal_form(const LambdaPtr& t, const ObjectPtr& type) {
  std::vector<ObjectPtr> ctx;
  return normal_at(t, type, ctx);
}

// ---------------------------------------------------------------------------
// Arrow-to-lambda translation. Levels are absolute, so the recursion carries
// the depth at which the produced term will sit.

namespace {

LambdaPtr translate(const ArrowPtr& t, const Signature& sig, int depth) {
  switch (t->kind) {
    case ArrKind::Const: {
      ArrowType ty = type_of(t, sig);
      LambdaPtr c = lam_const(t->name, exponential(ty.source, ty.target));
      return lam_abs(ty.source, lam_app(c, lam_var(depth)));
    }
    case ArrKind::Indet: {
      ArrowType ty = type_of(t, sig);
      return lam_abs(terminal(), lam_const(t->name, ty.target));
    }
    case ArrKind::Id:
      return lam_abs(t->obj1, lam_var(depth));
    case ArrKind::Bang:
      return lam_abs(t->obj1, lam_unit());
    case ArrKind::Proj: {
      ObjectPtr src = product(t->obj1, t->obj2);
      LambdaPtr body = t->index == 1 ? lam_fst(lam_var(depth)) : lam_snd(lam_var(depth));
      return lam_abs(src, body);
    }
    case ArrKind::Eval: {
      ObjectPtr src = product(t->obj1, exponential(t->obj1, t->obj2));
      return lam_abs(src, lam_app(lam_snd(lam_var(depth)), lam_fst(lam_var(depth))));
    }
    case ArrKind::Comp: {
      ObjectPtr src = type_of(t->sub2, sig).source;
      LambdaPtr g = translate(t->sub1, sig, depth + 1);
      LambdaPtr f = translate(t->sub2, sig, depth + 1);
      return lam_abs(src, lam_app(g, lam_app(f, lam_var(depth))));
    }
    case ArrKind::Pair: {
      ObjectPtr src = type_of(t->sub1, sig).source;
      LambdaPtr f = translate(t->sub1, sig, depth + 1);
      LambdaPtr g = translate(t->sub2, sig, depth + 1);
      return lam_abs(src, lam_pair(lam_app(f, lam_var(depth)), lam_app(g, lam_var(depth))));
    }
    case ArrKind::Curry: {
      // body : dom*ctx |- B; bind ctx outside and dom inside, feed the pair
      // (inner, outer) to the body's translation.
      LambdaPtr body = translate(t->sub1, sig, depth + 2);
      LambdaPtr applied = lam_app(body, lam_pair(lam_var(depth + 1), lam_var(depth)));
      return lam_abs(t->obj2, lam_abs(t->obj1, applied));
    }
  }
  throw InternalError("to_lambda: unhandled arrow kind");
}

}  // namespace

LambdaPtr to_lambda(const ArrowPtr& f, const Signature& sig) {
  if (!f) throw InternalError("to_lambda: null arrow");
  type_of(f, sig);
  return translate(f, sig, 0);
}

bool arrows_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig) {
  ArrowType tf = type_of(f, sig);
  ArrowType tg = type_of(g, sig);
  if (!type_equal(tf, tg))
    throw TypeMismatch("cannot compare arrows of types " + print_type(tf) + " and " +
                       print_type(tg));
  return lambda_equal(nf(to_lambda(f, sig)), nf(to_lambda(g, sig)));
}

// ---------------------------------------------------------------------------
// Compilation of normal forms back into arrow terms. The environment object
// nests new binders on the left: after entering X the environment E becomes
// X*E, matching what curry expects of its body.

namespace {

struct CompileCtx {
  const Signature& sig;
  std::vector<ObjectPtr> binders;  // outermost first; binders[i] has level i
  std::vector<ObjectPtr> envs;     // envs[i] = environment object at depth i
};

ArrowPtr var_access(const CompileCtx& c, int level, int upto) {
  if (upto == 0) {
    if (level != 0) throw InternalError("from_lambda: bad variable level");
    return identity(c.envs[0]);
  }
  if (level == upto) return proj(1, c.binders[upto], c.envs[upto - 1]);
  return comp(var_access(c, level, upto - 1), proj(2, c.binders[upto], c.envs[upto - 1]));
}

ArrowPtr compile(const LambdaPtr& t, CompileCtx& c) {
  ObjectPtr env = c.envs.back();
  switch (t->kind) {
    case LamKind::Var:
      return var_access(c, t->level, static_cast<int>(c.binders.size()) - 1);
    case LamKind::Unit:
      return bang(env);
    case LamKind::Pair:
      return pair(compile(t->t1, c), compile(t->t2, c));
    case LamKind::Fst: {
      ObjectPtr p = lambda_type(t->t1, c.binders);
      return comp(proj(1, p->left, p->right), compile(t->t1, c));
    }
    case LamKind::Snd: {
      ObjectPtr p = lambda_type(t->t1, c.binders);
      return comp(proj(2, p->left, p->right), compile(t->t1, c));
    }
    case LamKind::Abs: {
      c.binders.push_back(t->type);
      c.envs.push_back(product(t->type, env));
      ArrowPtr body = compile(t->t1, c);
      c.binders.pop_back();
      c.envs.pop_back();
      return curry(t->type, env, body);
    }
    case LamKind::App: {
      ObjectPtr fun = lambda_type(t->t1, c.binders);
      if (fun->kind != ObjKind::Exponential)
        throw InternalError("from_lambda: application head is not a function");
      return comp(eval(fun->left, fun->right), pair(compile(t->t2, c), compile(t->t1, c)));
    }
    case LamKind::Const: {
      if (c.sig.is_indet(t->name)) return comp(indet(t->name), bang(env));
      auto it = c.sig.arrow_consts.find(t->name);
      if (it == c.sig.arrow_consts.end())
        throw UnknownIdentifier("from_lambda: unknown constant '" + t->name + "'");
      const ArrowType& ty = it->second;
      return curry(ty.source, env, comp(constant(t->name), proj(1, ty.source, env)));
    }
  }
  throw InternalError("from_lambda: unhandled kind");
}

}  // namespace

ArrowPtr from_lambda(const LambdaPtr& normal, const Signature& sig) {
  if (!normal) throw InternalError("from_lambda: null term");
  if (normal->kind != LamKind::Abs)
    throw InternalError("from_lambda: expected an abstraction at the top");
  CompileCtx c{sig, {normal->type}, {normal->type}};
  return compile(normal->t1, c);
}

}  // namespace ccc
