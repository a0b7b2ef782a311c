#include "ccc/laws.hpp"

#include <functional>
#include <sstream>

#include "ccc/adjunction.hpp"
#include "ccc/generate.hpp"
#include "ccc/lambda.hpp"
#include "ccc/poly.hpp"
#include "ccc/rewrite.hpp"
#include "ccc/text.hpp"

namespace ccc {

int LawReport::total_failures() const {
  int n = 0;
  for (const auto& r : laws) n += r.failures;
  return n;
}

namespace {

struct Instance {
  ArrowPtr lhs;
  ArrowPtr rhs;
  bool holds = false;
};

void run_law(LawReport& report, const std::string& name, int cases,
             const std::function<Instance()>& one_case) {
  LawResult result;
  result.law = name;
  result.cases = cases;
  for (int i = 0; i < cases; ++i) {
    Instance inst = one_case();
    if (!inst.holds) {
      ++result.failures;
      if (result.counterexamples.size() < 3)
        result.counterexamples.emplace_back(print_arrow(inst.lhs), print_arrow(inst.rhs));
    }
  }
  report.laws.push_back(std::move(result));
}

}  // namespace

LawReport law_suite(const Signature& sig, int max_depth, int cases, std::uint64_t seed) {
  if (!sig.indeterminate)
    throw NoIndeterminate("the law suite requires an indeterminate in the signature");
  const ObjectPtr d = sig.indeterminate->target;

  LawReport report;
  report.seed = seed;
  report.depth = max_depth;
  report.cases = cases;

  GenConfig cfg;
  cfg.max_depth = max_depth;
  TermGenerator gen(sig, cfg, seed);

  auto poly = [&](const ObjectPtr& src) { return gen.gen_from(src, max_depth, true); };
  auto base = [&](const ObjectPtr& src) { return gen.gen_from(src, max_depth, false); };
  // g : A |- D->B of the base category, built as a curried body.
  auto base_into_exp = [&](const ObjectPtr& a) {
    return curry(d, a, base(product(d, a)));
  };
  auto mutated = [&](const ArrowPtr& t) {
    return mutate_equal(t, sig, gen.rand_below(1u << 30), 1 + static_cast<int>(gen.rand_below(3)));
  };

  // Relating the two sides of the product-based adjunction.
  run_law(report, "elimination-well-defined", cases, [&]() -> Instance {
    ArrowPtr f = poly(gen.gen_object());
    ArrowPtr g = mutated(f);
    Instance inst{f, g, false};
    inst.holds = poly_equal(f, g, sig) &&
                 arrows_equal(phi_prime(f, sig), phi_prime(g, sig), sig);
    return inst;
  });

  run_law(report, "eliminate-then-apply", cases, [&]() -> Instance {
    ArrowPtr f = poly(gen.gen_object());
    ArrowPtr round = gamma_prime(phi_prime(f, sig), sig);
    return {round, f, poly_equal(round, f, sig)};
  });

  run_law(report, "apply-then-eliminate", cases, [&]() -> Instance {
    ArrowPtr f = base(product(d, gen.gen_object()));
    ArrowPtr round = phi_prime(gamma_prime(f, sig), sig);
    return {round, f, arrows_equal(round, f, sig)};
  });

  run_law(report, "left-adjunction-composition", cases, [&]() -> Instance {
    ArrowPtr f = poly(gen.gen_object());
    ArrowPtr g = poly(type_of(f, sig).target);
    ArrowPtr lhs = phi_prime(comp(g, f), sig);
    ArrowPtr rhs = comp(phi_prime(g, sig), functor_F(f, sig));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  run_law(report, "left-adjunction-unit", cases, [&]() -> Instance {
    ObjectPtr a = gen.gen_object();
    ArrowPtr f = base(a);
    ArrowPtr lhs = gamma_prime(comp(f, phi_prime(identity(a), sig)), sig);
    return {lhs, f, poly_equal(lhs, heritage(f, sig), sig)};
  });

  // The exponent-based adjunction.
  run_law(report, "right-adjunction-beta", cases, [&]() -> Instance {
    ArrowPtr f = poly(gen.gen_object());
    ArrowPtr round = phi_double(gamma_double(f, sig), sig);
    return {round, f, poly_equal(round, f, sig)};
  });

  run_law(report, "right-adjunction-eta", cases, [&]() -> Instance {
    ArrowPtr g = base_into_exp(gen.gen_object());
    ArrowPtr round = gamma_double(phi_double(g, sig), sig);
    return {round, g, arrows_equal(round, g, sig)};
  });

  run_law(report, "right-composition-G", cases, [&]() -> Instance {
    ArrowPtr f = poly(gen.gen_object());
    ArrowPtr g = poly(type_of(f, sig).target);
    ArrowPtr lhs = gamma_double(comp(g, f), sig);
    ArrowPtr rhs = comp(functor_G(g, sig), gamma_double(f, sig));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  run_law(report, "right-composition-phi", cases, [&]() -> Instance {
    ArrowPtr f = base(gen.gen_object());
    ArrowPtr g = base_into_exp(type_of(f, sig).target);
    ArrowPtr lhs = phi_double(comp(g, f), sig);
    ArrowPtr rhs = comp(phi_double(g, sig), heritage(f, sig));
    return {lhs, rhs, poly_equal(lhs, rhs, sig)};
  });

  run_law(report, "right-adjunction-unit", cases, [&]() -> Instance {
    ArrowPtr f = base(gen.gen_object());
    ObjectPtr b = type_of(f, sig).target;
    ArrowPtr lhs = phi_double(comp(gamma_double(identity(b), sig), f), sig);
    return {lhs, f, poly_equal(lhs, heritage(f, sig), sig)};
  });

  // Composing either adjoint with the embedding gives the product/exponent
  // endofunctors.
  run_law(report, "composite-FH", cases, [&]() -> Instance {
    ArrowPtr f = base(gen.gen_object());
    ArrowPtr lhs = functor_F(heritage(f, sig), sig);
    ArrowPtr rhs = times(identity(d), f, sig);
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  run_law(report, "composite-GH", cases, [&]() -> Instance {
    ArrowPtr f = base(gen.gen_object());
    ArrowPtr lhs = functor_G(heritage(f, sig), sig);
    ArrowPtr rhs = hom(identity(d), f, sig);
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  // Functor laws.
  run_law(report, "functor-F-identity", cases, [&]() -> Instance {
    ObjectPtr a = gen.gen_object();
    ArrowPtr lhs = functor_F(identity(a), sig);
    ArrowPtr rhs = identity(product(d, a));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  run_law(report, "functor-F-composition", cases, [&]() -> Instance {
    ArrowPtr f = poly(gen.gen_object());
    ArrowPtr g = poly(type_of(f, sig).target);
    ArrowPtr lhs = functor_F(comp(g, f), sig);
    ArrowPtr rhs = comp(functor_F(g, sig), functor_F(f, sig));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  run_law(report, "functor-G-identity", cases, [&]() -> Instance {
    ObjectPtr a = gen.gen_object();
    ArrowPtr lhs = functor_G(identity(a), sig);
    ArrowPtr rhs = identity(exponential(d, a));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  run_law(report, "functor-G-composition", cases, [&]() -> Instance {
    ArrowPtr f = poly(gen.gen_object());
    ArrowPtr g = poly(type_of(f, sig).target);
    ArrowPtr lhs = functor_G(comp(g, f), sig);
    ArrowPtr rhs = comp(functor_G(g, sig), functor_G(f, sig));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  // The transpose bijection between D*A |- B and A |- D->B, with its
  // naturality squares.
  run_law(report, "transpose-beta", cases, [&]() -> Instance {
    ArrowPtr f = base(product(d, gen.gen_object()));
    ObjectPtr src = type_of(f, sig).source;
    ArrowPtr round = uncurry(curry(d, src->right, f), sig);
    return {round, f, arrows_equal(round, f, sig)};
  });

  run_law(report, "transpose-eta", cases, [&]() -> Instance {
    ArrowPtr g = base_into_exp(gen.gen_object());
    ObjectPtr a = type_of(g, sig).source;
    ArrowPtr round = curry(d, a, uncurry(g, sig));
    return {round, g, arrows_equal(round, g, sig)};
  });

  run_law(report, "transpose-natural-left", cases, [&]() -> Instance {
    ArrowPtr u = base(gen.gen_object());  // u : A' |- A
    ObjectPtr a = type_of(u, sig).target;
    ArrowPtr f = base(product(d, a));     // f : D*A |- B
    ArrowPtr lhs = comp(curry(d, a, f), u);
    ArrowPtr rhs = curry(d, type_of(u, sig).source, comp(f, times(identity(d), u, sig)));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  run_law(report, "transpose-natural-right", cases, [&]() -> Instance {
    ObjectPtr a = gen.gen_object();
    ArrowPtr f = base(product(d, a));     // f : D*A |- B
    ArrowPtr v = base(type_of(f, sig).target);  // v : B |- B'
    ArrowPtr lhs = curry(d, a, comp(v, f));
    ArrowPtr rhs = comp(hom(identity(d), v, sig), curry(d, a, f));
    return {lhs, rhs, arrows_equal(lhs, rhs, sig)};
  });

  return report;
}

std::string report_to_text(const LawReport& report) {
  std::ostringstream out;
  out << "suite seed=" << report.seed << " depth=" << report.depth << " cases=" << report.cases
      << " laws=" << report.laws.size() << " failures_total=" << report.total_failures() << "\n";
  for (const auto& law : report.laws) {
    out << "law name=" << law.law << " cases=" << law.cases << " failures=" << law.failures;
    if (!law.counterexamples.empty()) {
      out << " example_lhs=\"" << law.counterexamples.front().first << "\" example_rhs=\""
          << law.counterexamples.front().second << "\"";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ccc
