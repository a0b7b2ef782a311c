// Acceptance suite. Runs each top-level criterion at full scale over the
// default test signature and prints one PASS/FAIL line per criterion.
// Exits nonzero when any criterion fails.
//
// usage: ccc_acceptance [path-to-cli-binary]
//   The CLI path is needed by the surface criterion; it defaults to
//   $CCC_CLI, then to "./tools/ccc".

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccc/adjunction.hpp"
#include "ccc/generate.hpp"
#include "ccc/lambda.hpp"
#include "ccc/laws.hpp"
#include "ccc/model.hpp"
#include "ccc/poly.hpp"
#include "ccc/rewrite.hpp"
#include "ccc/text.hpp"
#include "support.hpp"

using namespace ccc;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
  if (!pass) ++g_failures;
}

// Criterion 1: every categorial and CC equality, instantiated with random
// well-typed substitutions at depth <= 4; 0 failures; runtime <= 60 s.
void criterion_equality_theory() {
  Signature sig = ts::default_sig();
  TermGenerator gen(sig, GenConfig{}, 0xC0FFEE);
  const int cases = 200;
  std::map<std::string, int> fails;
  auto tally = [&](const char* law, bool ok) {
    if (!ok) ++fails[law];
  };

  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < cases; ++i) {
    ArrowPtr f = gen.gen_term(4, true);
    ArrowType tf = type_of(f, sig);

    tally("unit-right", arrows_equal(comp(f, identity(tf.source)), f, sig));
    tally("unit-left", arrows_equal(comp(identity(tf.target), f), f, sig));

    ArrowPtr g = gen.gen_from(tf.target, 4, true);
    ArrowPtr h = gen.gen_from(type_of(g, sig).target, 4, true);
    tally("associativity", arrows_equal(comp(h, comp(g, f)), comp(comp(h, g), f), sig));

    tally("terminal-eta",
          arrows_equal(comp(bang(tf.target), f), bang(tf.source), sig));

    ArrowPtr f2 = gen.gen_from(tf.source, 4, true);
    ObjectPtr b1 = tf.target;
    ObjectPtr b2 = type_of(f2, sig).target;
    tally("product-beta-1", arrows_equal(comp(proj(1, b1, b2), pair(f, f2)), f, sig));
    tally("product-beta-2", arrows_equal(comp(proj(2, b1, b2), pair(f, f2)), f2, sig));

    ArrowPtr paired = pair(f, f2);
    tally("product-eta",
          arrows_equal(pair(comp(proj(1, b1, b2), paired), comp(proj(2, b1, b2), paired)),
                       paired, sig));

    ObjectPtr a = gen.gen_object(1);
    ArrowPtr body = gen.gen_from(product(a, tf.source), 4, true);
    ArrowPtr curried = curry(a, tf.source, body);
    tally("exponent-beta", arrows_equal(uncurry(curried, sig), body, sig));
    tally("exponent-eta", arrows_equal(curry(a, tf.source, uncurry(curried, sig)), curried, sig));
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  int total = 0;
  std::string broken;
  for (const auto& [law, n] : fails) {
    total += n;
    broken += " " + law + "=" + std::to_string(n);
  }
  bool in_time = elapsed <= 60000;
  std::ostringstream detail;
  detail << "9 equality families x " << cases << " cases, " << total << " failures"
         << (broken.empty() ? "" : " (" + broken + " )") << ", " << elapsed << " ms";
  report("criterion-1 equality-theory", total == 0 && in_time, detail.str());
}

const LawReport& shared_law_report() {
  static const LawReport report = law_suite(ts::default_sig(), 4, 200, 900913);
  return report;
}

void criterion_from_laws(const std::string& name, const std::vector<std::string>& laws,
                         int required_cases) {
  const LawReport& rep = shared_law_report();
  int failures = 0;
  int found = 0;
  std::ostringstream detail;
  for (const auto& want : laws) {
    for (const auto& law : rep.laws) {
      if (law.law != want) continue;
      ++found;
      failures += law.failures;
      if (law.failures > 0) detail << " " << law.law << "=" << law.failures;
    }
  }
  bool pass = failures == 0 && found == static_cast<int>(laws.size()) &&
              rep.cases >= required_cases;
  std::ostringstream line;
  line << found << " laws x " << rep.cases << " cases, " << failures << " failures"
       << detail.str();
  report(name, pass, line.str());
}

// Criterion 5: oracle concordance on small terms, plus model agreement for
// every engine-equal pair.
void criterion_oracle_concordance() {
  Signature sig = ts::default_sig();
  GenConfig cfg;
  cfg.max_depth = 2;
  cfg.object_depth = 0;
  TermGenerator gen(sig, cfg, 0x5EED);
  std::mt19937_64 model_rng(0x40DE1);
  FiniteModel probe = ts::probe_model(sig);

  const int want_pairs = 500;
  int pairs = 0, proved = 0, engine_equal = 0;
  int oracle_violations = 0, model_violations = 0, model_checks = 0;

  for (int i = 0; pairs < want_pairs && i < want_pairs * 20; ++i) {
    ArrowPtr t = gen.gen_term(2, true);
    if (node_count(t) > 12) continue;
    ArrowPtr u;
    if (gen.coin()) {
      u = mutate_equal(t, sig, 0xAB00 + i, 1 + i % 3);
    } else {
      u = gen.gen_from(type_of(t, sig).source, 2, true);
      if (!type_equal(type_of(u, sig), type_of(t, sig))) continue;
    }
    if (node_count(u) > 12) continue;
    if (!ts::model_safe(t, probe, sig) || !ts::model_safe(u, probe, sig)) continue;
    ++pairs;

    bool engine = arrows_equal(t, u, sig);
    if (oracle_equal(t, u, sig, 5) == OracleVerdict::Proved) {
      ++proved;
      if (!engine) ++oracle_violations;
    }
    if (engine) {
      ++engine_equal;
      for (int k = 0; k < 20; ++k) {
        FiniteModel m = ts::random_model(sig, model_rng);
        ++model_checks;
        if (interpret_finite(t, m, sig) != interpret_finite(u, m, sig)) ++model_violations;
      }
    }
  }

  std::ostringstream detail;
  detail << pairs << " pairs, " << proved << " proved (0 engine disagreements required, got "
         << oracle_violations << "), " << engine_equal << " engine-equal pairs x 20 models ("
         << model_checks << " tables, " << model_violations << " disagreements)";
  report("criterion-5 oracle-concordance",
         pairs >= want_pairs && oracle_violations == 0 && model_violations == 0 && proved > 0,
         detail.str());
}

// Criterion 6: the universal property of the extension. The default
// signature has no arrow T |- D, so these cases run over its extension with
// two points a0, a1.
void criterion_universal_property() {
  Signature sig = ts::pointed_sig();
  TermGenerator gen(sig, GenConfig{}, 0xF2EE);
  const int cases = 200;
  int failures = 0;

  for (int i = 0; i < cases; ++i) {
    ArrowPtr a = gen.coin() ? constant("a0") : constant("a1");
    if (!arrow_equal_syntactic(instantiate(indet("x"), a, sig), a)) ++failures;

    ArrowPtr k_arrow = gen.gen_term(4, false);
    if (!arrow_equal_syntactic(instantiate(heritage(k_arrow, sig), a, sig), k_arrow)) ++failures;

    ArrowPtr f = gen.gen_term(3, true);
    ArrowPtr g = mutate_equal(f, sig, 0xBEE + i, 2);
    if (!poly_equal(f, g, sig)) ++failures;
    if (!arrows_equal(instantiate(f, a, sig), instantiate(g, a, sig), sig)) ++failures;
  }
  report("criterion-6 universal-property", failures == 0,
         std::to_string(cases) + " cases x 4 checks, " + std::to_string(failures) + " failures");
}

int run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = "'" + cli + "' " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Criterion 7: parse/print round-trip plus the CLI exit-code contract.
void criterion_surface(const std::string& cli) {
  Signature sig = ts::default_sig();
  TermGenerator gen(sig, GenConfig{}, 0x50F7);
  int roundtrip_failures = 0;
  const int terms = 1000;
  for (int i = 0; i < terms; ++i) {
    ArrowPtr t = gen.gen_term(4, true);
    if (!arrow_equal_syntactic(parse_arrow(print_arrow(t), sig), t)) ++roundtrip_failures;
  }

  const char* sig_path = "acceptance_surface.sig";
  {
    std::ofstream out(sig_path);
    out << ts::kDefaultSigText << "arrow a0 : T |- D\n";
  }
  struct Case {
    int want;
    std::string args;
  };
  std::string q = std::string("'") + sig_path + "'";
  std::vector<Case> cases = {
      {0, "check-eq " + q + " 'f . id[A]' 'f'"},
      {1, "check-eq " + q + " 'p1[A,A]' 'p2[A,A]'"},
      {2, "check-eq " + q + " 'id[A' 'f'"},
      {2, "check-eq " + q + " 'f' 'g'"},
      {2, "typeof " + q + " 'nope'"},
      {2, "typeof 'acceptance_missing.sig' 'f'"},
      {0, "typeof " + q + " 'curry[D,A](h)'"},
      {0, "normalize " + q + " '<p1[A,B], p2[A,B]>'"},
      {0, "abstract --left " + q + " 'x . k[A]'"},
      {0, "abstract --right " + q + " 'x'"},
      {2, "abstract " + q + " 'x'"},
      {0, "apply --left " + q + " 'h'"},
      {0, "apply --right " + q + " 'curry[D,A](h)'"},
      {2, "apply --left " + q + " 'f'"},
      {0, "instantiate " + q + " 'x . k[A]' 'a0'"},
      {2, "instantiate " + q + " 'x' 'f'"},
      {0, "selftest " + q + " --depth 2 --cases 5 --seed 7"},
  };
  int exit_failures = 0;
  std::ostringstream bad;
  for (const auto& c : cases) {
    int got = run_cli(cli, c.args);
    if (got != c.want) {
      ++exit_failures;
      bad << " [" << c.args << " -> " << got << ", want " << c.want << "]";
    }
  }
  std::remove(sig_path);

  std::ostringstream detail;
  detail << terms << " round-trips (" << roundtrip_failures << " failures), "
         << cases.size() << " exit-code checks (" << exit_failures << " failures)" << bad.str();
  report("criterion-7 surface", roundtrip_failures == 0 && exit_failures == 0, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  if (argc > 1) {
    cli = argv[1];
  } else if (const char* env = std::getenv("CCC_CLI")) {
    cli = env;
  } else {
    cli = "./tools/ccc";
  }

  try {
    criterion_equality_theory();
    criterion_from_laws("criterion-2 elimination-roundtrips",
                        {"elimination-well-defined", "eliminate-then-apply",
                         "apply-then-eliminate"},
                        200);
    criterion_from_laws("criterion-3 adjunction-suite",
                        {"left-adjunction-composition", "left-adjunction-unit",
                         "right-adjunction-beta", "right-adjunction-eta", "right-composition-G",
                         "right-composition-phi", "right-adjunction-unit"},
                        200);
    criterion_from_laws("criterion-4 composite-adjunction",
                        {"composite-FH", "composite-GH", "transpose-beta", "transpose-eta",
                         "transpose-natural-left", "transpose-natural-right"},
                        100);
    criterion_oracle_concordance();
    criterion_universal_property();
    criterion_surface(cli);
  } catch (const std::exception& e) {
    std::cout << "[FAIL] acceptance: unexpected exception: " << e.what() << "\n";
    return 1;
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return 1;
}
