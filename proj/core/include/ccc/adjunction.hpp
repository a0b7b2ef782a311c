#pragma once

#include "ccc/syntax.hpp"

namespace ccc {

// The two adjunctions between the base category and its extension by the
// indeterminate x : T |- D: a left adjoint built from the product D*- and
// a right adjoint built from the exponential D->-. All six maps require an
// indeterminate in the signature and throw NoIndeterminate otherwise.

// Eliminates the indeterminate: for F : A |- B (possibly mentioning x),
// returns the x-free arrow D*A |- B by structural recursion, threading the
// extra D argument through every composition, pairing and currying.
ArrowPtr phi_prime(const ArrowPtr& F, const Signature& sig);

// Applies to the indeterminate: for f : D*A |- B in K, returns
// f . <x . k[A], id[A]> : A |- B in K[x].
ArrowPtr gamma_prime(const ArrowPtr& f, const Signature& sig);

// Left adjoint on arrows: F : A |- B goes to <p1, phi_prime(F)> : D*A |- D*B.
ArrowPtr functor_F(const ArrowPtr& F, const Signature& sig);

// Abstraction into the exponential: F : A |- B goes to
// curry[D,A](phi_prime(F)) : A |- D->B.
ArrowPtr gamma_double(const ArrowPtr& F, const Signature& sig);

// Application out of the exponential: g : A |- D->B in K goes to
// gamma_prime(eps . (1 x g)) : A |- B in K[x].
ArrowPtr phi_double(const ArrowPtr& g, const Signature& sig);

// Right adjoint on arrows: F : A |- B goes to
// curry[D,D->A](phi_prime(F) . <p1, eps[D,A]>) : D->A |- D->B.
ArrowPtr functor_G(const ArrowPtr& F, const Signature& sig);

}  // namespace ccc
