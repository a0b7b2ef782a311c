#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccc/syntax.hpp"

namespace ccc {

struct LawResult {
  std::string law;
  int cases = 0;
  int failures = 0;
  // First few failing instances, printed. Failures are data, not errors.
  std::vector<std::pair<std::string, std::string>> counterexamples;
};

struct LawReport {
  std::uint64_t seed = 0;
  int depth = 0;
  int cases = 0;
  std::vector<LawResult> laws;

  int total_failures() const;
  bool all_passed() const { return total_failures() == 0; }
};

// Runs every adjunction law over randomly generated well-typed terms: that
// phi_prime respects equality and forms a two-sided inverse pair with
// gamma_prime, the beta/eta equations of
// the exponent-based pair, both composition equations of the right adjoint,
// the unit equations, the functor laws for F and G, the composite
// D*-/D->- equations, and the transpose bijection with its naturality
// squares. Deterministic given (signature, depth, cases, seed).
LawReport law_suite(const Signature& sig, int max_depth, int cases, std::uint64_t seed);

// One record per law as key/value text.
std::string report_to_text(const LawReport& report);

}  // namespace ccc
