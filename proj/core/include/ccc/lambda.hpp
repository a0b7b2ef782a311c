#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccc/syntax.hpp"

namespace ccc {

struct LambdaTerm;
using LambdaPtr = std::shared_ptr<const LambdaTerm>;

enum class LamKind { Var, Abs, App, Pair, Fst, Snd, Unit, Const };

// The internal simply typed language the equality engine normalizes in.
// Types are ObjectExprs: Terminal is the unit type, Product the pair type,
// Exponential the function type. Variables carry canonical de Bruijn levels
// (the n-th enclosing binder from the outside), so alpha-equivalence is
// plain structural equality.
struct LambdaTerm {
  LamKind kind = LamKind::Unit;
  int level = 0;     // Var
  ObjectPtr type;    // Abs: bound-variable domain; Const: the constant's simple type
  std::string name;  // Const
  LambdaPtr t1, t2;  // Abs: body; App: fun, arg; Pair: fst, snd; Fst/Snd: operand
};

LambdaPtr lam_var(int level);
LambdaPtr lam_abs(ObjectPtr dom, LambdaPtr body);
LambdaPtr lam_app(LambdaPtr fun, LambdaPtr arg);
LambdaPtr lam_pair(LambdaPtr fst, LambdaPtr snd);
LambdaPtr lam_fst(LambdaPtr of);
LambdaPtr lam_snd(LambdaPtr of);
LambdaPtr lam_unit();
LambdaPtr lam_const(std::string name, ObjectPtr type);

bool lambda_equal(const LambdaPtr& a, const LambdaPtr& b);

// Type of a term under a context of binder domains, outermost first.
// Throws TypeMismatch on ill-typed or unbound input.
ObjectPtr lambda_type(const LambdaPtr& t, std::vector<ObjectPtr> ctx = {});

// Translates an arrow f : A |- B into a closed lambda term of type A -> B
// with one bound variable of type A. The indeterminate becomes a constant
// of type D with its unit argument elided.
LambdaPtr to_lambda(const ArrowPtr& f, const Signature& sig);

// Beta-eta-long normal form with unit collapse, computed by evaluation into
// a semantic domain followed by type-directed readback. Idempotent and
// type-preserving; defined on closed well-typed terms.
LambdaPtr nf(const LambdaPtr& t);

// Checks the normal-form invariant at a type: beta-redex-free, eta-long at
// function and product types, and Unit at the terminal type. Independent of
// nf's own machinery.
bool is_normal_form(const LambdaPtr& t, const ObjectPtr& type);

// Decides provable equality of arrow terms: the congruence generated by the
// categorial and CC equalities, with the indeterminate treated as a free
// constant. Throws TypeMismatch when the two types differ.
bool arrows_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig);

// Compiles a normal-form lambda image (as produced by nf of a translation)
// back to an arrow term of the same type.
ArrowPtr from_lambda(const LambdaPtr& normal, const Signature& sig);

}  // namespace ccc
