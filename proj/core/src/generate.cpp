#include "ccc/generate.hpp"

#include <utility>

namespace ccc {

TermGenerator::TermGenerator(Signature sig, GenConfig cfg, std::uint64_t seed)
    : sig_(std::move(sig)), cfg_(cfg), rng_(seed) {
  for (const auto& name : sig_.object_atoms) atom_names_.push_back(name);
  for (const auto& [name, ty] : sig_.arrow_consts) consts_.emplace_back(name, ty);
  if (atom_names_.empty()) throw Error("term generation needs at least one object atom");
}

std::uint64_t TermGenerator::rand_below(std::uint64_t n) {
  return n == 0 ? 0 : rng_() % n;
}

ObjectPtr TermGenerator::gen_object(int depth) {
  // Terminal shows up rarely: it collapses whatever sits above it.
  std::uint64_t roll = rand_below(20);
  if (depth <= 0 || roll < 9)
    return roll == 0 ? terminal() : atom(atom_names_[rand_below(atom_names_.size())]);
  if (roll < 15) return product(gen_object(depth - 1), gen_object(depth - 1));
  return exponential(gen_object(depth - 1), gen_object(depth - 1));
}

ArrowPtr TermGenerator::gen_from(const ObjectPtr& source, int depth, bool allow_indet) {
  return gen_rec(source, depth, allow_indet).term;
}

TermGenerator::GeneratedTerm TermGenerator::gen_typed(const ObjectPtr& source, int depth,
                                                      bool allow_indet) {
  return gen_rec(source, depth, allow_indet);
}

ArrowPtr TermGenerator::gen_term(int depth, bool allow_indet) {
  return gen_from(gen_object(cfg_.object_depth), depth, allow_indet);
}

TermGenerator::GeneratedTerm TermGenerator::gen_rec(const ObjectPtr& source, int depth,
                                                    bool allow_indet) {
  allow_indet = allow_indet && sig_.indeterminate.has_value();

  // Leaf moves available at this source.
  std::vector<GeneratedTerm> leaves;
  leaves.push_back({identity(source), source});
  leaves.push_back({bang(source), terminal()});
  if (source->kind == ObjKind::Product) {
    leaves.push_back({proj(1, source->left, source->right), source->left});
    leaves.push_back({proj(2, source->left, source->right), source->right});
    if (source->right->kind == ObjKind::Exponential &&
        obj_equal(source->right->left, source->left))
      leaves.push_back({eval(source->left, source->right->right), source->right->right});
  }
  for (const auto& [name, ty] : consts_)
    if (obj_equal(ty.source, source)) leaves.push_back({constant(name), ty.target});
  if (allow_indet && source->kind == ObjKind::Terminal)
    leaves.push_back({indet(sig_.indeterminate->name), sig_.indeterminate->target});

  int w_leaf = cfg_.w_leaf;
  int w_comp = depth > 0 ? cfg_.w_comp : 0;
  int w_pair = depth > 0 ? cfg_.w_pair : 0;
  int w_curry = depth > 0 ? cfg_.w_curry : 0;
  int w_point = allow_indet ? cfg_.w_point : 0;
  int total = w_leaf + w_comp + w_pair + w_curry + w_point;
  std::uint64_t roll = rand_below(static_cast<std::uint64_t>(total));

  if (roll < static_cast<std::uint64_t>(w_leaf)) {
    const GeneratedTerm& pick = leaves[rand_below(leaves.size())];
    return {pick.term, pick.target};
  }
  roll -= w_leaf;
  if (roll < static_cast<std::uint64_t>(w_comp)) {
    GeneratedTerm before = gen_rec(source, depth - 1, allow_indet);
    GeneratedTerm after = gen_rec(before.target, depth - 1, allow_indet);
    return {comp(after.term, before.term), after.target};
  }
  roll -= w_comp;
  if (roll < static_cast<std::uint64_t>(w_pair)) {
    GeneratedTerm fst = gen_rec(source, depth - 1, allow_indet);
    GeneratedTerm snd = gen_rec(source, depth - 1, allow_indet);
    return {pair(fst.term, snd.term), product(fst.target, snd.target)};
  }
  roll -= w_pair;
  if (roll < static_cast<std::uint64_t>(w_curry)) {
    ObjectPtr dom = gen_object(cfg_.object_depth > 0 ? cfg_.object_depth - 1 : 0);
    GeneratedTerm body = gen_rec(product(dom, source), depth - 1, allow_indet);
    return {curry(dom, source, body.term), exponential(dom, body.target)};
  }
  // The point x . k[source], usable at any source.
  return {comp(indet(sig_.indeterminate->name), bang(source)), sig_.indeterminate->target};
}

}  // namespace ccc
