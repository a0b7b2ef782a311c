#pragma once

#include "ccc/syntax.hpp"

namespace ccc {

bool mentions_indet(const ArrowPtr& t);

// Embeds an arrow of the base category into the extension. The term is kept
// as-is (the embedding is injective on syntax); inputs already mentioning
// the indeterminate are rejected.
ArrowPtr heritage(const ArrowPtr& f, const Signature& sig);

// Equality in the extension: the smallest CC congruence over terms that may
// mention the indeterminate. Decided by the normal-form engine with the
// indeterminate as a free constant.
bool poly_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig);

// Substitutes the point a : T |- D for every occurrence of the
// indeterminate. instantiate(heritage(f), a) is f, syntactically.
ArrowPtr instantiate(const ArrowPtr& f, const ArrowPtr& a, const Signature& sig);

}  // namespace ccc
