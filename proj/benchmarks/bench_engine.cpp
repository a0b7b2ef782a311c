#include <benchmark/benchmark.h>

#include "ccc/adjunction.hpp"
#include "ccc/generate.hpp"
#include "ccc/lambda.hpp"
#include "ccc/rewrite.hpp"
#include "ccc/text.hpp"

namespace {

const char* kSigText =
    "object D\nobject A\nobject B\nobject C\n"
    "arrow f : A |- B\narrow g : B |- C\narrow h : D*A |- B\n"
    "indeterminate x : T |- D\n";

struct Fixture {
  ccc::Signature sig = ccc::parse_signature(kSigText);
  std::vector<ccc::ArrowPtr> terms;
  Fixture() {
    ccc::TermGenerator gen(sig, ccc::GenConfig{}, 42);
    for (int i = 0; i < 64; ++i) terms.push_back(gen.gen_term(4, true));
  }
};

Fixture& fix() {
  static Fixture f;
  return f;
}

void BM_normalize(benchmark::State& state) {
  auto& f = fix();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccc::nf(ccc::to_lambda(f.terms[i % f.terms.size()], f.sig)));
    ++i;
  }
}
BENCHMARK(BM_normalize);

void BM_arrows_equal(benchmark::State& state) {
  auto& f = fix();
  size_t i = 0;
  for (auto _ : state) {
    const auto& t = f.terms[i % f.terms.size()];
    benchmark::DoNotOptimize(
        ccc::arrows_equal(t, ccc::comp(t, ccc::identity(ccc::type_of(t, f.sig).source)), f.sig));
    ++i;
  }
}
BENCHMARK(BM_arrows_equal);

void BM_phi_prime(benchmark::State& state) {
  auto& f = fix();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccc::phi_prime(f.terms[i % f.terms.size()], f.sig));
    ++i;
  }
}
BENCHMARK(BM_phi_prime);

void BM_oracle_small(benchmark::State& state) {
  auto& f = fix();
  ccc::ArrowPtr a = ccc::parse_arrow("<p1[A,B] . id[A*B], p2[A,B]>", f.sig);
  ccc::ArrowPtr b = ccc::parse_arrow("id[A*B]", f.sig);
  for (auto _ : state)
    benchmark::DoNotOptimize(ccc::oracle_equal(a, b, f.sig, 5));
}
BENCHMARK(BM_oracle_small);

}  // namespace

BENCHMARK_MAIN();
