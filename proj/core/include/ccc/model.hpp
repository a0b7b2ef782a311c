#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccc/syntax.hpp"

namespace ccc {

// Set-valued models with small finite carriers, used as an independent
// soundness oracle: the CC equalities hold in sets, so provably equal
// arrows must get identical tables.
//
// Elements are coded as indices. |T| = 1; a pair (a, b) in A*B is coded
// a*|B| + b; a function h : A -> B is coded as the base-|B| digit string
// whose a-th digit is h(a).
struct FiniteModel {
  std::map<std::string, std::vector<std::string>> atoms;  // atom -> element labels
  std::map<std::string, std::vector<std::int64_t>> const_tables;
  std::optional<std::int64_t> indet_element;  // element of the carrier of D

  // Checks that every table is total and type-correct for its constant.
  void validate(const Signature& sig) const;
};

// Carrier size of an object; throws MissingInterpretation for an atom the
// model does not name and ModelTooLarge past the size guard.
std::int64_t carrier_size(const ObjectPtr& o, const FiniteModel& m);

// The set-theoretic interpretation of f as a total table indexed by source
// element codes, compositional in the term structure.
std::vector<std::int64_t> interpret_finite(const ArrowPtr& f, const FiniteModel& m,
                                           const Signature& sig);

}  // namespace ccc
