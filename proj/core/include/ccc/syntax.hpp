#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "ccc/errors.hpp"

namespace ccc {

struct ObjectExpr;
using ObjectPtr = std::shared_ptr<const ObjectExpr>;

enum class ObjKind { Terminal, Atom, Product, Exponential };

// Object terms: T, declared atoms, A*B and A->B. Immutable. Identity of
// objects is purely syntactic; A*(B*C) and (A*B)*C are distinct objects and
// the assoc_left/assoc_right arrows mediate between them.
struct ObjectExpr {
  ObjKind kind = ObjKind::Terminal;
  std::string name;       // Atom
  ObjectPtr left, right;  // Product: factors; Exponential: left = domain, right = codomain
};

ObjectPtr terminal();
ObjectPtr atom(std::string name);
ObjectPtr product(ObjectPtr l, ObjectPtr r);
ObjectPtr exponential(ObjectPtr dom, ObjectPtr cod);

bool obj_equal(const ObjectPtr& a, const ObjectPtr& b);

struct ArrowExpr;
using ArrowPtr = std::shared_ptr<const ArrowExpr>;

enum class ArrKind { Const, Id, Bang, Proj, Eval, Comp, Pair, Curry, Indet };

// Arrow terms. Every object index appearing in the formation rules is kept
// as an explicit annotation, so typing is a bottom-up computation with no
// inference. The Indet leaf is the freely adjoined arrow x : T |- D; terms
// without it are arrows of the base category.
struct ArrowExpr {
  ArrKind kind = ArrKind::Id;
  std::string name;      // Const; Indet keeps the declared name for printing
  int index = 0;         // Proj: 1 or 2
  ObjectPtr obj1, obj2;  // Id/Bang: obj1; Proj/Eval: obj1, obj2; Curry: obj1 = dom, obj2 = ctx
  ArrowPtr sub1, sub2;   // Comp: sub1 after, sub2 before; Pair: fst, snd; Curry: sub1 body
};

ArrowPtr constant(std::string name);
ArrowPtr identity(ObjectPtr at);
ArrowPtr bang(ObjectPtr at);                         // k : A |- T
ArrowPtr proj(int index, ObjectPtr l, ObjectPtr r);  // p1/p2 : A1*A2 |- Ai
ArrowPtr eval(ObjectPtr dom, ObjectPtr cod);         // eps : A*(A->B) |- B
ArrowPtr comp(ArrowPtr after, ArrowPtr before);      // after . before
ArrowPtr pair(ArrowPtr fst, ArrowPtr snd);
ArrowPtr curry(ObjectPtr dom, ObjectPtr ctx, ArrowPtr body);  // body : dom*ctx |- B, result : ctx |- dom->B
ArrowPtr indet(std::string name = "x");

bool arrow_equal_syntactic(const ArrowPtr& a, const ArrowPtr& b);
int node_count(const ArrowPtr& t);

struct ArrowType {
  ObjectPtr source;
  ObjectPtr target;
};

bool type_equal(const ArrowType& a, const ArrowType& b);

// Declared object atoms, typed arrow constants, and at most one
// indeterminate x : T |- D.
struct Signature {
  std::set<std::string> object_atoms;
  std::map<std::string, ArrowType> arrow_consts;

  struct IndetDecl {
    std::string name;
    ObjectPtr target;  // the source is always T
  };
  std::optional<IndetDecl> indeterminate;

  bool has_atom(const std::string& n) const { return object_atoms.count(n) != 0; }
  bool is_indet(const std::string& n) const { return indeterminate && indeterminate->name == n; }

  // Throws if a constant type mentions an undeclared atom or the
  // indeterminate name clashes with a constant.
  void validate() const;
};

// Rejects objects mentioning undeclared atoms.
void validate_object(const ObjectPtr& o, const Signature& sig);

// Bottom-up typing per the formation rules. Throws UnknownIdentifier,
// NoIndeterminate, or TypeMismatch (naming the offending subterm and the two
// clashing objects).
ArrowType type_of(const ArrowPtr& t, const Signature& sig);

// Derived combinators, emitted as their literal expansions (no
// normalization happens here).
ArrowPtr times(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig);  // f x g : A*C |- B*D
ArrowPtr hom(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig);    // f -> g : (B->C) |- (A->D)
ArrowPtr uncurry(const ArrowPtr& g, const Signature& sig);                   // eps . (1 x g) : A*C |- B, for g : C |- A->B
ArrowPtr assoc_left(const ObjectPtr& a, const ObjectPtr& b, const ObjectPtr& c);   // (A*B)*C |- A*(B*C)
ArrowPtr assoc_right(const ObjectPtr& a, const ObjectPtr& b, const ObjectPtr& c);  // A*(B*C) |- (A*B)*C
ArrowPtr braid(const ObjectPtr& a, const ObjectPtr& b);                            // <p2, p1> : A*B |- B*A

}  // namespace ccc
