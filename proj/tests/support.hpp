#pragma once

#include <random>
#include <string>

#include "ccc/model.hpp"
#include "ccc/text.hpp"

namespace ts {

inline const char* kDefaultSigText =
    "object D\n"
    "object A\n"
    "object B\n"
    "object C\n"
    "arrow f : A |- B\n"
    "arrow g : B |- C\n"
    "arrow h : D*A |- B\n"
    "indeterminate x : T |- D\n";

inline ccc::Signature default_sig() { return ccc::parse_signature(kDefaultSigText); }

// The default signature has no arrow into D from T; instantiation tests need
// points, so they run over this extension with two of them.
inline ccc::Signature pointed_sig() {
  return ccc::parse_signature(std::string(kDefaultSigText) +
                              "arrow a0 : T |- D\n"
                              "arrow a1 : T |- D\n");
}

inline ccc::ArrowPtr parse(const std::string& s, const ccc::Signature& sig) {
  return ccc::parse_arrow(s, sig);
}

// Deterministic model with every atom carrier at the maximum size used by
// the random models below. Carrier sizes are monotone in the atom sizes, so
// a term the probe can interpret is interpretable under any of them.
inline ccc::FiniteModel probe_model(const ccc::Signature& sig) {
  ccc::FiniteModel m;
  for (const auto& name : sig.object_atoms) m.atoms.emplace(name, std::vector<std::string>{"e0", "e1", "e2"});
  for (const auto& [name, ty] : sig.arrow_consts) {
    std::int64_t src = ccc::carrier_size(ty.source, m);
    m.const_tables.emplace(name, std::vector<std::int64_t>(src, 0));
  }
  if (sig.indeterminate) m.indet_element = 0;
  return m;
}

// Whether every carrier met while interpreting t stays below the size guard.
inline bool model_safe(const ccc::ArrowPtr& t, const ccc::FiniteModel& probe,
                       const ccc::Signature& sig) {
  try {
    ccc::interpret_finite(t, probe, sig);
    return true;
  } catch (const ccc::ModelTooLarge&) {
    return false;
  }
}

// A random model with atom carriers of size 1..max_atom and random constant
// tables and indeterminate element.
inline ccc::FiniteModel random_model(const ccc::Signature& sig, std::mt19937_64& rng,
                                     int max_atom = 3) {
  ccc::FiniteModel m;
  for (const auto& name : sig.object_atoms) {
    int n = 1 + static_cast<int>(rng() % max_atom);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    m.atoms.emplace(name, std::move(labels));
  }
  for (const auto& [name, ty] : sig.arrow_consts) {
    std::int64_t src = ccc::carrier_size(ty.source, m);
    std::int64_t tgt = ccc::carrier_size(ty.target, m);
    std::vector<std::int64_t> table(src);
    for (auto& v : table) v = static_cast<std::int64_t>(rng() % tgt);
    m.const_tables.emplace(name, std::move(table));
  }
  if (sig.indeterminate) {
    std::int64_t d = ccc::carrier_size(sig.indeterminate->target, m);
    m.indet_element = static_cast<std::int64_t>(rng() % d);
  }
  m.validate(sig);
  return m;
}

}  // namespace ts
