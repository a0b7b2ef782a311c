#include "ccc/rewrite.hpp"

#include <deque>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "ccc/lambda.hpp"
#include "ccc/text.hpp"

namespace ccc {

namespace {

// Matches the literal expansion of 1_A x g as produced by `times`:
// <id[A] . p1[A,C], g . p2[A,C]>. Returns g, or nullptr.
ArrowPtr match_id_times(const ArrowPtr& t, const ObjectPtr& a, const ObjectPtr& c) {
  if (t->kind != ArrKind::Pair) return nullptr;
  const ArrowPtr& l = t->sub1;
  const ArrowPtr& r = t->sub2;
  if (l->kind != ArrKind::Comp || r->kind != ArrKind::Comp) return nullptr;
  if (l->sub1->kind != ArrKind::Id || !obj_equal(l->sub1->obj1, a)) return nullptr;
  if (l->sub2->kind != ArrKind::Proj || l->sub2->index != 1) return nullptr;
  if (r->sub2->kind != ArrKind::Proj || r->sub2->index != 2) return nullptr;
  if (!obj_equal(l->sub2->obj1, a) || !obj_equal(l->sub2->obj2, c)) return nullptr;
  if (!obj_equal(r->sub2->obj1, a) || !obj_equal(r->sub2->obj2, c)) return nullptr;
  return r->sub1;
}

// eps[A,B] . (1_A x curry[A,C](f))  ->  f
ArrowPtr match_exp_beta(const ArrowPtr& t) {
  if (t->kind != ArrKind::Comp || t->sub1->kind != ArrKind::Eval) return nullptr;
  const ObjectPtr& a = t->sub1->obj1;
  if (t->sub2->kind != ArrKind::Pair) return nullptr;
  // The inner g must be a curry with matching annotations.
  const ArrowPtr& r = t->sub2->sub2;
  if (r->kind != ArrKind::Comp || r->sub1->kind != ArrKind::Curry) return nullptr;
  const ObjectPtr& c = r->sub1->obj2;
  ArrowPtr g = match_id_times(t->sub2, a, c);
  if (!g || g->kind != ArrKind::Curry) return nullptr;
  if (!obj_equal(g->obj1, a)) return nullptr;
  return g->sub1;
}

// curry[A,C](eps[A,B] . (1_A x g))  ->  g   for g : C |- A->B
ArrowPtr match_exp_eta(const ArrowPtr& t) {
  if (t->kind != ArrKind::Curry) return nullptr;
  const ArrowPtr& body = t->sub1;
  if (body->kind != ArrKind::Comp || body->sub1->kind != ArrKind::Eval) return nullptr;
  if (!obj_equal(body->sub1->obj1, t->obj1)) return nullptr;
  return match_id_times(body->sub2, t->obj1, t->obj2);
}

// The literal expansion eps[A,B] . <id[A] . p1[A,C], g . p2[A,C]> of the
// uncurry abbreviation applied to g.
ArrowPtr build_uncurry_pattern(const ObjectPtr& a, const ObjectPtr& b, const ObjectPtr& c,
                               const ArrowPtr& g) {
  return comp(eval(a, b),
              pair(comp(identity(a), proj(1, a, c)), comp(g, proj(2, a, c))));
}

void root_rewrites(const ArrowPtr& t, const Signature& sig, std::vector<ArrowPtr>& out) {
  ArrowType ty = type_of(t, sig);

  if (t->kind == ArrKind::Comp) {
    if (t->sub2->kind == ArrKind::Id) out.push_back(t->sub1);  // f . id -> f
    if (t->sub1->kind == ArrKind::Id) out.push_back(t->sub2);  // id . f -> f
    if (t->sub2->kind == ArrKind::Comp)                        // h . (g . f) -> (h . g) . f
      out.push_back(comp(comp(t->sub1, t->sub2->sub1), t->sub2->sub2));
    if (t->sub1->kind == ArrKind::Comp)                        // (h . g) . f -> h . (g . f)
      out.push_back(comp(t->sub1->sub1, comp(t->sub1->sub2, t->sub2)));
    if (t->sub1->kind == ArrKind::Proj && t->sub2->kind == ArrKind::Pair)  // p_i . <f1,f2> -> f_i
      out.push_back(t->sub1->index == 1 ? t->sub2->sub1 : t->sub2->sub2);
    if (ArrowPtr f = match_exp_beta(t)) out.push_back(f);
  }

  // f -> f . id and f -> id . f
  out.push_back(comp(t, identity(ty.source)));
  out.push_back(comp(identity(ty.target), t));

  // Anything into T collapses to k. The reverse direction would have to
  // invent an arbitrary arrow, so it is not enumerated.
  if (ty.target->kind == ObjKind::Terminal && t->kind != ArrKind::Bang)
    out.push_back(bang(ty.source));

  // <p1 . h, p2 . h> -> h
  if (t->kind == ArrKind::Pair && t->sub1->kind == ArrKind::Comp &&
      t->sub2->kind == ArrKind::Comp && t->sub1->sub1->kind == ArrKind::Proj &&
      t->sub1->sub1->index == 1 && t->sub2->sub1->kind == ArrKind::Proj &&
      t->sub2->sub1->index == 2 && obj_equal(t->sub1->sub1->obj1, t->sub2->sub1->obj1) &&
      obj_equal(t->sub1->sub1->obj2, t->sub2->sub1->obj2) &&
      arrow_equal_syntactic(t->sub1->sub2, t->sub2->sub2))
    out.push_back(t->sub1->sub2);

  // h -> <p1 . h, p2 . h> when the target is a product
  if (ty.target->kind == ObjKind::Product) {
    const ObjectPtr& a = ty.target->left;
    const ObjectPtr& b = ty.target->right;
    out.push_back(pair(comp(proj(1, a, b), t), comp(proj(2, a, b), t)));
  }

  // curry(uncurry-pattern(g)) -> g
  if (ArrowPtr g = match_exp_eta(t)) out.push_back(g);

  // g -> curry(uncurry-pattern(g)) when the target is an exponential
  if (ty.target->kind == ObjKind::Exponential) {
    const ObjectPtr& a = ty.target->left;
    const ObjectPtr& b = ty.target->right;
    out.push_back(curry(a, ty.source, build_uncurry_pattern(a, b, ty.source, t)));
  }

  // f -> uncurry-pattern(curry(f)) when the source is a product
  if (ty.source->kind == ObjKind::Product) {
    const ObjectPtr& a = ty.source->left;
    const ObjectPtr& c = ty.source->right;
    out.push_back(build_uncurry_pattern(a, ty.target, c, curry(a, c, t)));
  }
}

}  // namespace

std::vector<ArrowPtr> rewrite_steps(const ArrowPtr& t, const Signature& sig) {
  std::vector<ArrowPtr> out;
  root_rewrites(t, sig, out);
  if (t->sub1) {
    for (const ArrowPtr& r : rewrite_steps(t->sub1, sig)) {
      auto n = std::make_shared<ArrowExpr>(*t);
      n->sub1 = r;
      out.push_back(n);
    }
  }
  if (t->sub2) {
    for (const ArrowPtr& r : rewrite_steps(t->sub2, sig)) {
      auto n = std::make_shared<ArrowExpr>(*t);
      n->sub2 = r;
      out.push_back(n);
    }
  }
  return out;
}

namespace {

constexpr std::size_t kVisitedCap = 200000;

struct Side {
  std::unordered_map<std::string, int> seen;
  std::vector<ArrowPtr> frontier;
  int radius = 0;
};

// Expands one BFS level. Returns true when a newly reached term is already
// known to the other side.
bool expand(Side& side, const Side& other, const Signature& sig, int node_cap) {
  std::vector<ArrowPtr> next;
  for (const ArrowPtr& t : side.frontier) {
    for (const ArrowPtr& r : rewrite_steps(t, sig)) {
      if (node_count(r) > node_cap) continue;
      std::string key = print_arrow(r);
      if (side.seen.count(key) != 0) continue;
      if (other.seen.count(key) != 0) return true;
      if (side.seen.size() >= kVisitedCap) {
        side.frontier.clear();
        return false;
      }
      side.seen.emplace(std::move(key), side.radius + 1);
      next.push_back(r);
    }
  }
  side.frontier = std::move(next);
  ++side.radius;
  return false;
}

}  // namespace

OracleVerdict oracle_equal(const ArrowPtr& f, const ArrowPtr& g, const Signature& sig,
                           int bound) {
  ArrowType tf = type_of(f, sig);
  ArrowType tg = type_of(g, sig);
  if (!type_equal(tf, tg))
    throw TypeMismatch("cannot relate arrows of types " + print_type(tf) + " and " +
                       print_type(tg));
  if (arrow_equal_syntactic(f, g)) return OracleVerdict::Proved;

  int node_cap = 3 * std::max(node_count(f), node_count(g)) + 24;
  Side from_f, from_g;
  from_f.seen.emplace(print_arrow(f), 0);
  from_f.frontier = {f};
  from_g.seen.emplace(print_arrow(g), 0);
  from_g.frontier = {g};

  while (from_f.radius + from_g.radius < bound &&
         (!from_f.frontier.empty() || !from_g.frontier.empty())) {
    Side& smaller =
        (!from_g.frontier.empty() &&
         (from_f.frontier.empty() || from_g.frontier.size() < from_f.frontier.size()))
            ? from_g
            : from_f;
    const Side& other = (&smaller == &from_f) ? from_g : from_f;
    if (expand(smaller, other, sig, node_cap)) return OracleVerdict::Proved;
  }
  return OracleVerdict::UnprovedAtBound;
}

ArrowPtr mutate_equal(const ArrowPtr& t, const Signature& sig, std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  int node_cap = 2 * node_count(t) + 30;
  ArrowPtr cur = t;
  for (int i = 0; i < steps; ++i) {
    std::vector<ArrowPtr> options;
    for (const ArrowPtr& r : rewrite_steps(cur, sig))
      if (node_count(r) <= node_cap) options.push_back(r);
    if (options.empty()) break;
    cur = options[rng() % options.size()];
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Display cleanup. Every rule is a directed, strictly shrinking instance of
// the equalities, so the fixpoint loop terminates.

namespace {

ArrowPtr cleanup_root(const ArrowPtr& t) {
  if (t->kind == ArrKind::Comp) {
    if (t->sub2->kind == ArrKind::Id) return t->sub1;
    if (t->sub1->kind == ArrKind::Id) return t->sub2;
    if (t->sub1->kind == ArrKind::Proj && t->sub2->kind == ArrKind::Pair)
      return t->sub1->index == 1 ? t->sub2->sub1 : t->sub2->sub2;
    // (u . p_i) . <f1,f2> -> u . f_i
    if (t->sub1->kind == ArrKind::Comp && t->sub1->sub2->kind == ArrKind::Proj &&
        t->sub2->kind == ArrKind::Pair)
      return comp(t->sub1->sub1, t->sub1->sub2->index == 1 ? t->sub2->sub1 : t->sub2->sub2);
    // eps . <a, curry(f) . c> -> f . <a, c>
    if (t->sub1->kind == ArrKind::Eval && t->sub2->kind == ArrKind::Pair &&
        t->sub2->sub2->kind == ArrKind::Comp && t->sub2->sub2->sub1->kind == ArrKind::Curry)
      return comp(t->sub2->sub2->sub1->sub1, pair(t->sub2->sub1, t->sub2->sub2->sub2));
    // eps . <a, curry(f)> -> f . <a, id>
    if (t->sub1->kind == ArrKind::Eval && t->sub2->kind == ArrKind::Pair &&
        t->sub2->sub2->kind == ArrKind::Curry)
      return comp(t->sub2->sub2->sub1,
                  pair(t->sub2->sub1, identity(t->sub2->sub2->obj2)));
  }
  if (t->kind == ArrKind::Pair && t->sub1->kind == ArrKind::Comp &&
      t->sub2->kind == ArrKind::Comp && t->sub1->sub1->kind == ArrKind::Proj &&
      t->sub1->sub1->index == 1 && t->sub2->sub1->kind == ArrKind::Proj &&
      t->sub2->sub1->index == 2 && obj_equal(t->sub1->sub1->obj1, t->sub2->sub1->obj1) &&
      obj_equal(t->sub1->sub1->obj2, t->sub2->sub1->obj2) &&
      arrow_equal_syntactic(t->sub1->sub2, t->sub2->sub2))
    return t->sub1->sub2;
  return t;
}

ArrowPtr cleanup_pass(const ArrowPtr& t) {
  auto n = std::make_shared<ArrowExpr>(*t);
  if (t->sub1) n->sub1 = cleanup_pass(t->sub1);
  if (t->sub2) n->sub2 = cleanup_pass(t->sub2);
  ArrowPtr cur = n;
  for (;;) {
    ArrowPtr next = cleanup_root(cur);
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

}  // namespace

ArrowPtr simplify_arrow(const ArrowPtr& t, const Signature& sig) {
  ArrowPtr v = from_lambda(nf(to_lambda(t, sig)), sig);
  for (int pass = 0; pass < 64; ++pass) {
    ArrowPtr w = cleanup_pass(v);
    if (arrow_equal_syntactic(w, v)) break;
    v = w;
  }
  return v;
}

}  // namespace ccc
