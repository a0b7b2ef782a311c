#include "doctest.h"

#include "ccc/generate.hpp"
#include "ccc/lambda.hpp"
#include "ccc/rewrite.hpp"
#include "support.hpp"

using namespace ccc;

TEST_CASE("type_of on the special arrows") {
  Signature sig = ts::default_sig();
  ObjectPtr A = atom("A"), B = atom("B");

  ArrowType id_ty = type_of(identity(A), sig);
  CHECK(obj_equal(id_ty.source, A));
  CHECK(obj_equal(id_ty.target, A));

  // eps : A*(A->B) |- B
  ArrowType ev = type_of(eval(A, B), sig);
  CHECK(print_type(ev) == "A*(A->B) |- B");

  // x : T |- D
  ArrowType ind = type_of(indet("x"), sig);
  CHECK(print_type(ind) == "T |- D");

  CHECK(print_type(type_of(bang(A), sig)) == "A |- T");
  CHECK(print_type(type_of(proj(1, A, B), sig)) == "A*B |- A");
  CHECK(print_type(type_of(proj(2, A, B), sig)) == "A*B |- B");
}

TEST_CASE("type_of rejects ill-formed terms") {
  Signature sig = ts::default_sig();
  ObjectPtr A = atom("A"), B = atom("B");

  // p1 expects source A*B, id[A] targets A
  CHECK_THROWS_AS(type_of(comp(proj(1, A, B), identity(A)), sig), TypeMismatch);
  // pair components must share a source
  CHECK_THROWS_AS(type_of(pair(identity(A), identity(B)), sig), TypeMismatch);
  // curry body must have source dom*ctx
  CHECK_THROWS_AS(type_of(curry(A, B, identity(A)), sig), TypeMismatch);
  CHECK_THROWS_AS(type_of(constant("nope"), sig), UnknownIdentifier);
  CHECK_THROWS_AS(type_of(identity(atom("Z")), sig), UnknownIdentifier);

  Signature bare = parse_signature("object A\n");
  CHECK_THROWS_AS(type_of(indet("x"), bare), NoIndeterminate);
}

TEST_CASE("braid is the literal <p2, p1>") {
  Signature sig = ts::default_sig();
  ObjectPtr A = atom("A"), B = atom("B");
  ArrowPtr c = braid(A, B);
  CHECK(print_arrow(c) == "<p2[A,B], p1[A,B]>");
  CHECK(print_type(type_of(c, sig)) == "A*B |- B*A");
}

TEST_CASE("times of identities collapses to the identity of the product") {
  Signature sig = ts::default_sig();
  ObjectPtr A = atom("A"), B = atom("B");
  ArrowPtr t = times(identity(A), identity(B), sig);
  CHECK(print_arrow(t) == "<id[A] . p1[A,B], id[B] . p2[A,B]>");
  ArrowPtr want = identity(product(A, B));
  // Two independent routes agree: the normal-form engine and the bounded
  // rewrite search.
  CHECK(arrows_equal(t, want, sig));
  CHECK(oracle_equal(t, want, sig, 6) == OracleVerdict::Proved);
}

TEST_CASE("uncurry is the literal eps . (1 x g)") {
  Signature sig = ts::default_sig();
  ObjectPtr D = atom("D"), A = atom("A");
  ArrowPtr g = curry(D, A, constant("h"));  // A |- D->B
  ArrowPtr u = uncurry(g, sig);
  CHECK(print_type(type_of(u, sig)) == "D*A |- B");
  CHECK(print_arrow(u) == "eps[D,B] . <id[D] . p1[D,A], curry[D,A](h) . p2[D,A]>");
  CHECK_THROWS_AS(uncurry(constant("f"), sig), TypeMismatch);
}

TEST_CASE("hom has the displayed type") {
  Signature sig = ts::default_sig();
  // f : A |- B and g : B |- C give f->g : (B->B) |- (A->C)
  ArrowPtr e = hom(constant("f"), constant("g"), sig);
  CHECK(print_type(type_of(e, sig)) == "B->B |- A->C");
}

TEST_CASE("associators are mutually inverse and well-typed") {
  Signature sig = ts::default_sig();
  TermGenerator gen(sig, GenConfig{}, 7101);
  for (int i = 0; i < 30; ++i) {
    ObjectPtr a = gen.gen_object(1), b = gen.gen_object(1), c = gen.gen_object(1);
    ArrowPtr to = assoc_left(a, b, c);
    ArrowPtr from = assoc_right(a, b, c);
    ObjectPtr nested_l = product(product(a, b), c);
    ObjectPtr nested_r = product(a, product(b, c));
    CHECK(obj_equal(type_of(to, sig).source, nested_l));
    CHECK(obj_equal(type_of(to, sig).target, nested_r));
    CHECK(obj_equal(type_of(from, sig).source, nested_r));
    CHECK(arrows_equal(comp(from, to), identity(nested_l), sig));
    CHECK(arrows_equal(comp(to, from), identity(nested_r), sig));
  }
}

TEST_CASE("braid . braid is the identity") {
  Signature sig = ts::default_sig();
  for (const char* a : {"A", "B", "C", "D"})
    for (const char* b : {"A", "B", "C", "D"}) {
      ObjectPtr oa = atom(a), ob = atom(b);
      CHECK(arrows_equal(comp(braid(ob, oa), braid(oa, ob)), identity(product(oa, ob)), sig));
    }
}

TEST_CASE("derived combinators type-check at their displayed types") {
  Signature sig = ts::default_sig();
  TermGenerator gen(sig, GenConfig{}, 2024);
  for (int i = 0; i < 50; ++i) {
    ArrowPtr f = gen.gen_term(3, true);
    ArrowPtr g = gen.gen_term(3, true);
    ArrowType tf = type_of(f, sig), tg = type_of(g, sig);
    ArrowType tt = type_of(times(f, g, sig), sig);
    CHECK(obj_equal(tt.source, product(tf.source, tg.source)));
    CHECK(obj_equal(tt.target, product(tf.target, tg.target)));
    ArrowType th = type_of(hom(f, g, sig), sig);
    CHECK(obj_equal(th.source, exponential(tf.target, tg.source)));
    CHECK(obj_equal(th.target, exponential(tf.source, tg.target)));
  }
}

TEST_CASE("generated terms are well-typed at their predicted type") {
  // The generator tracks types incrementally while it builds; type_of
  // recomputes them bottom-up. The two routes must agree.
  Signature sig = ts::default_sig();
  TermGenerator gen(sig, GenConfig{}, 31337);
  for (int i = 0; i < 200; ++i) {
    ObjectPtr src = gen.gen_object();
    auto [term, target] = gen.gen_typed(src, 4, true);
    ArrowType ty = type_of(term, sig);  // must not throw
    CHECK(obj_equal(ty.source, src));
    CHECK(obj_equal(ty.target, target));
  }
}
