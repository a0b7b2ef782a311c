#include "doctest.h"

#include "ccc/generate.hpp"
#include "ccc/lambda.hpp"
#include "ccc/rewrite.hpp"
#include "support.hpp"

using namespace ccc;

TEST_CASE("oracle proves the one-step equalities") {
  Signature sig = ts::default_sig();
  ObjectPtr A = atom("A");

  CHECK(oracle_equal(comp(identity(A), identity(A)), identity(A), sig, 3) ==
        OracleVerdict::Proved);

  // <p1 . h, p2 . h> = h, with a concrete pair-valued h
  ArrowPtr h = pair(constant("f"), comp(constant("g"), constant("f")));  // A |- B*C
  ObjectPtr B = atom("B"), C = atom("C");
  ArrowPtr expanded = pair(comp(proj(1, B, C), h), comp(proj(2, B, C), h));
  CHECK(oracle_equal(expanded, h, sig, 4) == OracleVerdict::Proved);
}

TEST_CASE("oracle never proves the projections equal") {
  Signature sig = ts::default_sig();
  ObjectPtr A = atom("A");
  CHECK(oracle_equal(proj(1, A, A), proj(2, A, A), sig, 5) == OracleVerdict::UnprovedAtBound);
}

TEST_CASE("x . k[T] is provably x") {
  Signature sig = ts::default_sig();
  ArrowPtr left = comp(indet("x"), bang(terminal()));
  CHECK(oracle_equal(left, indet("x"), sig, 6) == OracleVerdict::Proved);
  CHECK(arrows_equal(left, indet("x"), sig));
}

TEST_CASE("every emitted rewrite preserves the type and provable equality") {
  Signature sig = ts::default_sig();
  TermGenerator gen(sig, GenConfig{}, 1212);
  for (int i = 0; i < 40; ++i) {
    ArrowPtr t = gen.gen_term(3, true);
    ArrowType ty = type_of(t, sig);
    auto steps = rewrite_steps(t, sig);
    CHECK(!steps.empty());
    for (size_t j = 0; j < steps.size() && j < 12; ++j) {
      CHECK(type_equal(type_of(steps[j], sig), ty));
      CHECK(arrows_equal(steps[j], t, sig));
    }
  }
}

TEST_CASE("mutate_equal stays in the equivalence class") {
  Signature sig = ts::default_sig();
  TermGenerator gen(sig, GenConfig{}, 4242);
  for (int i = 0; i < 60; ++i) {
    ArrowPtr t = gen.gen_term(3, true);
    ArrowPtr u = mutate_equal(t, sig, 9000 + i, 3);
    CHECK(type_equal(type_of(u, sig), type_of(t, sig)));
    CHECK(arrows_equal(t, u, sig));
  }
}

TEST_CASE("a proved verdict implies engine equality") {
  Signature sig = ts::default_sig();
  GenConfig cfg;
  cfg.max_depth = 2;
  TermGenerator gen(sig, cfg, 31415);
  int proved = 0;
  for (int i = 0; i < 200; ++i) {
    ArrowPtr t = gen.gen_term(2, true);
    ArrowPtr u = gen.coin() ? mutate_equal(t, sig, 100 + i, 1 + i % 3)
                            : gen.gen_from(type_of(t, sig).source, 2, true);
    bool same_type = type_equal(type_of(t, sig), type_of(u, sig));
    if (!same_type) continue;
    if (oracle_equal(t, u, sig, 4) == OracleVerdict::Proved) {
      ++proved;
      CHECK(arrows_equal(t, u, sig));
    }
  }
  CHECK(proved > 50);  // the mutated half must be mostly provable at this bound
}

TEST_CASE("oracle requires equal types") {
  Signature sig = ts::default_sig();
  CHECK_THROWS_AS(oracle_equal(constant("f"), constant("g"), sig, 3), TypeMismatch);
}
