#include "ccc/adjunction.hpp"

#include "ccc/poly.hpp"
#include "ccc/text.hpp"

namespace ccc {

namespace {

const ObjectPtr& require_indet(const Signature& sig) {
  if (!sig.indeterminate)
    throw NoIndeterminate("this operation requires an indeterminate in the signature");
  return sig.indeterminate->target;
}

void require_base(const ArrowPtr& f, const char* what) {
  if (mentions_indet(f))
    throw TypeMismatch(std::string(what) + " expects an arrow of the base category; '" +
                       print_arrow(f) + "' mentions the indeterminate");
}

// Elimination of the indeterminate. Comp, Pair and Curry nodes recurse;
// primitive leaves of the base category compose with p2; the indeterminate
// leaf becomes p1.
ArrowPtr phi_rec(const ArrowPtr& t, const Signature& sig, const ObjectPtr& d) {
  switch (t->kind) {
    case ArrKind::Indet:
      return proj(1, d, terminal());
    case ArrKind::Comp: {
      ObjectPtr a = type_of(t->sub2, sig).source;
      return comp(phi_rec(t->sub1, sig, d), pair(proj(1, d, a), phi_rec(t->sub2, sig, d)));
    }
    case ArrKind::Pair:
      return pair(phi_rec(t->sub1, sig, d), phi_rec(t->sub2, sig, d));
    case ArrKind::Curry: {
      const ObjectPtr& a = t->obj1;
      const ObjectPtr& c = t->obj2;
      ArrowPtr inner = phi_rec(t->sub1, sig, d);  // D*(A*C) |- B
      ArrowPtr body = comp(comp(comp(inner, assoc_left(d, a, c)),
                                times(braid(a, d), identity(c), sig)),
                           assoc_right(a, d, c));
      return curry(a, product(d, c), body);
    }
    default: {
      ObjectPtr a = type_of(t, sig).source;
      return comp(t, proj(2, d, a));
    }
  }
}

}  // namespace

ArrowPtr phi_prime(const ArrowPtr& F, const Signature& sig) {
  const ObjectPtr& d = require_indet(sig);
  type_of(F, sig);
  return phi_rec(F, sig, d);
}

ArrowPtr gamma_prime(const ArrowPtr& f, const Signature& sig) {
  const ObjectPtr& d = require_indet(sig);
  require_base(f, "gamma_prime");
  ArrowType ty = type_of(f, sig);
  if (ty.source->kind != ObjKind::Product || !obj_equal(ty.source->left, d))
    throw TypeMismatch("gamma_prime expects a source of shape " + print_object(d) +
                       "*A; '" + print_arrow(f) + "' has source " + print_object(ty.source));
  const ObjectPtr& a = ty.source->right;
  return comp(f, pair(comp(indet(sig.indeterminate->name), bang(a)), identity(a)));
}

ArrowPtr functor_F(const ArrowPtr& F, const Signature& sig) {
  const ObjectPtr& d = require_indet(sig);
  ArrowType ty = type_of(F, sig);
  return pair(proj(1, d, ty.source), phi_prime(F, sig));
}

ArrowPtr gamma_double(const ArrowPtr& F, const Signature& sig) {
  const ObjectPtr& d = require_indet(sig);
  ArrowType ty = type_of(F, sig);
  return curry(d, ty.source, phi_prime(F, sig));
}

ArrowPtr phi_double(const ArrowPtr& g, const Signature& sig) {
  const ObjectPtr& d = require_indet(sig);
  require_base(g, "phi_double");
  ArrowType ty = type_of(g, sig);
  if (ty.target->kind != ObjKind::Exponential || !obj_equal(ty.target->left, d))
    throw TypeMismatch("phi_double expects a target of shape " + print_object(d) +
                       "->B; '" + print_arrow(g) + "' has target " + print_object(ty.target));
  return gamma_prime(uncurry(g, sig), sig);
}

ArrowPtr functor_G(const ArrowPtr& F, const Signature& sig) {
  const ObjectPtr& d = require_indet(sig);
  ArrowType ty = type_of(F, sig);
  ObjectPtr da = exponential(d, ty.source);
  return curry(d, da, comp(phi_prime(F, sig), pair(proj(1, d, da), eval(d, ty.source))));
}

}  // namespace ccc
