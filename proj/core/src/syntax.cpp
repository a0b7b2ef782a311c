#include "ccc/syntax.hpp"

#include <utility>

#include "ccc/text.hpp"

namespace ccc {

ObjectPtr terminal() {
  static const ObjectPtr t = std::make_shared<ObjectExpr>();
  return t;
}

ObjectPtr atom(std::string name) {
  auto o = std::make_shared<ObjectExpr>();
  o->kind = ObjKind::Atom;
  o->name = std::move(name);
  return o;
}

ObjectPtr product(ObjectPtr l, ObjectPtr r) {
  auto o = std::make_shared<ObjectExpr>();
  o->kind = ObjKind::Product;
  o->left = std::move(l);
  o->right = std::move(r);
  return o;
}

ObjectPtr exponential(ObjectPtr dom, ObjectPtr cod) {
  auto o = std::make_shared<ObjectExpr>();
  o->kind = ObjKind::Exponential;
  o->left = std::move(dom);
  o->right = std::move(cod);
  return o;
}

bool obj_equal(const ObjectPtr& a, const ObjectPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ObjKind::Terminal:
      return true;
    case ObjKind::Atom:
      return a->name == b->name;
    case ObjKind::Product:
    case ObjKind::Exponential:
      return obj_equal(a->left, b->left) && obj_equal(a->right, b->right);
  }
  return false;
}

namespace {

std::shared_ptr<ArrowExpr> make_arrow(ArrKind kind) {
  auto n = std::make_shared<ArrowExpr>();
  n->kind = kind;
  return n;
}

}  // namespace

ArrowPtr constant(std::string name) {
  auto n = make_arrow(ArrKind::Const);
  n->name = std::move(name);
  return n;
}

ArrowPtr identity(ObjectPtr at) {
  auto n = make_arrow(ArrKind::Id);
  n->obj1 = std::move(at);
  return n;
}

ArrowPtr bang(ObjectPtr at) {
  auto n = make_arrow(ArrKind::Bang);
  n->obj1 = std::move(at);
  return n;
}

ArrowPtr proj(int index, ObjectPtr l, ObjectPtr r) {
  if (index != 1 && index != 2) throw InternalError("proj: index must be 1 or 2");
  auto n = make_arrow(ArrKind::Proj);
  n->index = index;
  n->obj1 = std::move(l);
  n->obj2 = std::move(r);
  return n;
}

ArrowPtr eval(ObjectPtr dom, ObjectPtr cod) {
  auto n = make_arrow(ArrKind::Eval);
  n->obj1 = std::move(dom);
  n->obj2 = std::move(cod);
  return n;
}

ArrowPtr comp(ArrowPtr after, ArrowPtr before) {
  auto n = make_arrow(ArrKind::Comp);
  n->sub1 = std::move(after);
  n->sub2 = std::move(before);
  return n;
}

ArrowPtr pair(ArrowPtr fst, ArrowPtr snd) {
  auto n = make_arrow(ArrKind::Pair);
  n->sub1 = std::move(fst);
  n->sub2 = std::move(snd);
  return n;
}

ArrowPtr curry(ObjectPtr dom, ObjectPtr ctx, ArrowPtr body) {
  auto n = make_arrow(ArrKind::Curry);
  n->obj1 = std::move(dom);
  n->obj2 = std::move(ctx);
  n->sub1 = std::move(body);
  return n;
}

ArrowPtr indet(std::string name) {
  auto n = make_arrow(ArrKind::Indet);
  n->name = std::move(name);
  return n;
}

bool arrow_equal_syntactic(const ArrowPtr& a, const ArrowPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->index != b->index || a->name != b->name) return false;
  if (!obj_equal(a->obj1, b->obj1) || !obj_equal(a->obj2, b->obj2)) return false;
  if ((a->sub1 == nullptr) != (b->sub1 == nullptr)) return false;
  if ((a->sub2 == nullptr) != (b->sub2 == nullptr)) return false;
  if (a->sub1 && !arrow_equal_syntactic(a->sub1, b->sub1)) return false;
  if (a->sub2 && !arrow_equal_syntactic(a->sub2, b->sub2)) return false;
  return true;
}

int node_count(const ArrowPtr& t) {
  if (!t) return 0;
  return 1 + node_count(t->sub1) + node_count(t->sub2);
}

bool type_equal(const ArrowType& a, const ArrowType& b) {
  return obj_equal(a.source, b.source) && obj_equal(a.target, b.target);
}

void Signature::validate() const {
  for (const auto& [name, ty] : arrow_consts) {
    validate_object(ty.source, *this);
    validate_object(ty.target, *this);
  }
  if (indeterminate) {
    validate_object(indeterminate->target, *this);
    if (arrow_consts.count(indeterminate->name) != 0)
      throw DuplicateName("indeterminate '" + indeterminate->name +
                          "' clashes with an arrow constant");
  }
}

void validate_object(const ObjectPtr& o, const Signature& sig) {
  if (!o) throw InternalError("validate_object: null object");
  switch (o->kind) {
    case ObjKind::Terminal:
      return;
    case ObjKind::Atom:
      if (!sig.has_atom(o->name))
        throw UnknownIdentifier("unknown object atom '" + o->name + "'");
      return;
    case ObjKind::Product:
    case ObjKind::Exponential:
      validate_object(o->left, sig);
      validate_object(o->right, sig);
      return;
  }
}

ArrowType type_of(const ArrowPtr& t, const Signature& sig) {
  if (!t) throw InternalError("type_of: null arrow");
  switch (t->kind) {
    case ArrKind::Const: {
      auto it = sig.arrow_consts.find(t->name);
      if (it == sig.arrow_consts.end())
        throw UnknownIdentifier("unknown arrow constant '" + t->name + "'");
      return it->second;
    }
    case ArrKind::Id:
      validate_object(t->obj1, sig);
      return {t->obj1, t->obj1};
    case ArrKind::Bang:
      validate_object(t->obj1, sig);
      return {t->obj1, terminal()};
    case ArrKind::Proj:
      validate_object(t->obj1, sig);
      validate_object(t->obj2, sig);
      return {product(t->obj1, t->obj2), t->index == 1 ? t->obj1 : t->obj2};
    case ArrKind::Eval:
      validate_object(t->obj1, sig);
      validate_object(t->obj2, sig);
      return {product(t->obj1, exponential(t->obj1, t->obj2)), t->obj2};
    case ArrKind::Comp: {
      ArrowType after = type_of(t->sub1, sig);
      ArrowType before = type_of(t->sub2, sig);
      if (!obj_equal(before.target, after.source))
        throw TypeMismatch("cannot compose in '" + print_arrow(t) + "': '" +
                           print_arrow(t->sub1) + "' has source " + print_object(after.source) +
                           " but '" + print_arrow(t->sub2) + "' has target " +
                           print_object(before.target));
      return {before.source, after.target};
    }
    case ArrKind::Pair: {
      ArrowType fst = type_of(t->sub1, sig);
      ArrowType snd = type_of(t->sub2, sig);
      if (!obj_equal(fst.source, snd.source))
        throw TypeMismatch("pair components of '" + print_arrow(t) + "' have sources " +
                           print_object(fst.source) + " and " + print_object(snd.source));
      return {fst.source, product(fst.target, snd.target)};
    }
    case ArrKind::Curry: {
      validate_object(t->obj1, sig);
      validate_object(t->obj2, sig);
      ArrowType body = type_of(t->sub1, sig);
      ObjectPtr want = product(t->obj1, t->obj2);
      if (!obj_equal(body.source, want))
        throw TypeMismatch("curry body '" + print_arrow(t->sub1) + "' has source " +
                           print_object(body.source) + ", expected " + print_object(want));
      return {t->obj2, exponential(t->obj1, body.target)};
    }
    case ArrKind::Indet: {
      if (!sig.indeterminate)
        throw NoIndeterminate("term mentions '" + t->name +
                              "' but the signature has no indeterminate");
      if (sig.indeterminate->name != t->name)
        throw UnknownIdentifier("unknown identifier '" + t->name + "'");
      return {terminal(), sig.indeterminate->target};
    }
  }
  throw InternalError("type_of: unhandled arrow kind");
}

ArrowPtr times(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig) {
  ArrowType tf = type_of(f, sig);
  ArrowType tg = type_of(g, sig);
  return pair(comp(f, proj(1, tf.source, tg.source)), comp(g, proj(2, tf.source, tg.source)));
}

ArrowPtr hom(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig) {
  ArrowType tf = type_of(f, sig);  // A |- B
  ArrowType tg = type_of(g, sig);  // C |- D'
  ObjectPtr bc = exponential(tf.target, tg.source);
  ArrowPtr body = comp(comp(g, eval(tf.target, tg.source)), times(f, identity(bc), sig));
  return curry(tf.source, bc, body);
}

ArrowPtr uncurry(const ArrowPtr& g, const Signature& sig) {
  ArrowType tg = type_of(g, sig);
  if (tg.target->kind != ObjKind::Exponential)
    throw TypeMismatch("uncurry expects a target of exponential shape; '" + print_arrow(g) +
                       "' has target " + print_object(tg.target));
  ObjectPtr a = tg.target->left;
  ObjectPtr b = tg.target->right;
  return comp(eval(a, b), times(identity(a), g, sig));
}

ArrowPtr assoc_left(const ObjectPtr& a, const ObjectPtr& b, const ObjectPtr& c) {
  ObjectPtr ab = product(a, b);
  // <p1 . p1, p2 x 1>
  ArrowPtr rest = pair(comp(proj(2, a, b), proj(1, ab, c)), comp(identity(c), proj(2, ab, c)));
  return pair(comp(proj(1, a, b), proj(1, ab, c)), rest);
}

ArrowPtr assoc_right(const ObjectPtr& a, const ObjectPtr& b, const ObjectPtr& c) {
  ObjectPtr bc = product(b, c);
  // <1 x p1, p2 . p2>
  ArrowPtr front = pair(comp(identity(a), proj(1, a, bc)), comp(proj(1, b, c), proj(2, a, bc)));
  return pair(front, comp(proj(2, b, c), proj(2, a, bc)));
}

ArrowPtr braid(const ObjectPtr& a, const ObjectPtr& b) {
  return pair(proj(2, a, b), proj(1, a, b));
}

}  // namespace ccc
