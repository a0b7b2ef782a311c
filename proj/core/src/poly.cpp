#include "ccc/poly.hpp"

#include "ccc/lambda.hpp"
#include "ccc/text.hpp"

namespace ccc {

bool mentions_indet(const ArrowPtr& t) {
  if (!t) return false;
  if (t->kind == ArrKind::Indet) return true;
  return mentions_indet(t->sub1) || mentions_indet(t->sub2);
}

ArrowPtr heritage(const ArrowPtr& f, const Signature& sig) {
  if (mentions_indet(f))
    throw TypeMismatch("heritage expects an arrow of the base category; '" + print_arrow(f) +
                       "' mentions the indeterminate");
  type_of(f, sig);
  return f;
}

bool poly_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig) {
  // The extension is free over the signature plus the point x, so its
  // smallest CC congruence coincides with provable equality with x read as a
  // free constant.
  return arrows_equal(f, g, sig);
}

namespace {

ArrowPtr substitute_indet(const ArrowPtr& t, const ArrowPtr& a) {
  if (!mentions_indet(t)) return t;
  if (t->kind == ArrKind::Indet) return a;
  auto n = std::make_shared<ArrowExpr>(*t);
  if (t->sub1) n->sub1 = substitute_indet(t->sub1, a);
  if (t->sub2) n->sub2 = substitute_indet(t->sub2, a);
  return n;
}

}  // namespace

ArrowPtr instantiate(const ArrowPtr& f, const ArrowPtr& a, const Signature& sig) {
  if (!sig.indeterminate)
    throw NoIndeterminate("instantiate requires an indeterminate in the signature");
  if (mentions_indet(a))
    throw TypeMismatch("the replacement point must not mention the indeterminate");
  ArrowType ta = type_of(a, sig);
  if (ta.source->kind != ObjKind::Terminal || !obj_equal(ta.target, sig.indeterminate->target))
    throw TypeMismatch("replacement point has type " + print_type(ta) + ", expected T |- " +
                       print_object(sig.indeterminate->target));
  type_of(f, sig);
  return substitute_indet(f, a);
}

}  // namespace ccc
