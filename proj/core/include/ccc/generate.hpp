#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccc/syntax.hpp"

namespace ccc {

struct GenConfig {
  int max_depth = 4;     // term constructor depth
  int object_depth = 2;  // depth of freshly generated object annotations
  bool allow_indet = true;

  // Per-constructor weights for term generation.
  int w_leaf = 6;
  int w_comp = 5;
  int w_pair = 4;
  int w_curry = 3;
  int w_point = 4;  // x . k[S] insertion, when the indeterminate is allowed
};

// Well-typed-by-construction random terms over a signature. Deterministic
// given (signature, config, seed).
class TermGenerator {
 public:
  TermGenerator(Signature sig, GenConfig cfg, std::uint64_t seed);

  ObjectPtr gen_object(int depth);
  ObjectPtr gen_object() { return gen_object(cfg_.object_depth); }

  struct GeneratedTerm {
    ArrowPtr term;
    ObjectPtr target;  // computed incrementally during generation
  };

  // A random well-typed term with the given source and free target.
  ArrowPtr gen_from(const ObjectPtr& source, int depth, bool allow_indet);
  ArrowPtr gen_from(const ObjectPtr& source) {
    return gen_from(source, cfg_.max_depth, cfg_.allow_indet);
  }
  GeneratedTerm gen_typed(const ObjectPtr& source, int depth, bool allow_indet);

  // A random well-typed term with random source.
  ArrowPtr gen_term(int depth, bool allow_indet);
  ArrowPtr gen_term() { return gen_term(cfg_.max_depth, cfg_.allow_indet); }

  std::uint64_t rand_below(std::uint64_t n);
  bool coin() { return rand_below(2) == 0; }

  const GenConfig& config() const { return cfg_; }
  const Signature& signature() const { return sig_; }

 private:
  GeneratedTerm gen_rec(const ObjectPtr& source, int depth, bool allow_indet);

  Signature sig_;
  GenConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<std::string> atom_names_;
  std::vector<std::pair<std::string, ArrowType>> consts_;
};

}  // namespace ccc
