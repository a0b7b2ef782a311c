#pragma once

#include <cstdint>
#include <vector>

#include "ccc/syntax.hpp"

namespace ccc {

// Every single-step rewrite of t under the categorial and CC equalities,
// applied at any position. Directions that would branch infinitely (such as
// rewriting k_A back to an arbitrary arrow into T) are omitted; each emitted
// step is a sound instance, so reachability only ever proves equality.
std::vector<ArrowPtr> rewrite_steps(const ArrowPtr& t, const Signature& sig);

enum class OracleVerdict { Proved, UnprovedAtBound };

// Brute-force equational closure, explored breadth-first from both sides.
// Proved only when a chain of at most `bound` basic-equality steps joins f
// and g; intended for small terms. Throws TypeMismatch when types differ.
OracleVerdict oracle_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig, int bound);

// Applies up to `steps` random sound rewrites; the result is provably equal
// to t and has the same type. Deterministic given the seed.
ArrowPtr mutate_equal(const ArrowPtr& t, const Signature& sig, std::uint64_t seed, int steps);

// Normal-form-based pretty form: recompiles nf(to_lambda(t)) to an arrow and
// then applies shrinking cleanup rewrites. Provably equal to t.
ArrowPtr simplify_arrow(const ArrowPtr& t, const Signature& sig);

}  // namespace ccc
