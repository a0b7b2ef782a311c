#include "ccc/model.hpp"

#include "ccc/text.hpp"

namespace ccc {

namespace {

constexpr std::int64_t kMaxCarrier = 1 << 20;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  // Operands are carrier sizes already below the guard, so the product
  // cannot overflow before the check.
  std::int64_t r = a * b;
  if (r > kMaxCarrier) throw ModelTooLarge("carrier exceeds the size guard");
  return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// The a-th base-|B| digit of the function code h.
std::int64_t fun_digit(std::int64_t h, std::int64_t a, std::int64_t size_b) {
  std::int64_t p = h;
  for (std::int64_t i = 0; i < a; ++i) p /= size_b;
  return p % size_b;
}

}  // namespace

std::int64_t carrier_size(const ObjectPtr& o, const FiniteModel& m) {
  switch (o->kind) {
    case ObjKind::Terminal:
      return 1;
    case ObjKind::Atom: {
      auto it = m.atoms.find(o->name);
      if (it == m.atoms.end())
        throw MissingInterpretation("model has no carrier for atom '" + o->name + "'");
      if (it->second.empty())
        throw MissingInterpretation("carrier of atom '" + o->name + "' is empty");
      return static_cast<std::int64_t>(it->second.size());
    }
    case ObjKind::Product:
      return checked_mul(carrier_size(o->left, m), carrier_size(o->right, m));
    case ObjKind::Exponential:
      return checked_pow(carrier_size(o->right, m), carrier_size(o->left, m));
  }
  throw InternalError("carrier_size: unhandled object kind");
}

void FiniteModel::validate(const Signature& sig) const {
  for (const auto& [name, table] : const_tables) {
    auto it = sig.arrow_consts.find(name);
    if (it == sig.arrow_consts.end())
      throw MissingInterpretation("model interprets '" + name +
                                  "', which the signature does not declare");
    std::int64_t src = carrier_size(it->second.source, *this);
    std::int64_t tgt = carrier_size(it->second.target, *this);
    if (static_cast<std::int64_t>(table.size()) != src)
      throw MissingInterpretation("table for '" + name + "' has " +
                                  std::to_string(table.size()) + " entries, expected " +
                                  std::to_string(src));
    for (std::int64_t v : table)
      if (v < 0 || v >= tgt)
        throw MissingInterpretation("table for '" + name + "' maps outside its target carrier");
  }
  if (indet_element) {
    if (!sig.indeterminate)
      throw MissingInterpretation("model names an indeterminate element but the signature has none");
    std::int64_t d = carrier_size(sig.indeterminate->target, *this);
    if (*indet_element < 0 || *indet_element >= d)
      throw MissingInterpretation("indeterminate element is outside the carrier of its target");
  }
}

std::vector<std::int64_t> interpret_finite(const ArrowPtr& f, const FiniteModel& m,
                                           const Signature& sig) {
  ArrowType ty = type_of(f, sig);
  std::int64_t src = carrier_size(ty.source, m);
  switch (f->kind) {
    case ArrKind::Const: {
      auto it = m.const_tables.find(f->name);
      if (it == m.const_tables.end())
        throw MissingInterpretation("model has no table for constant '" + f->name + "'");
      if (static_cast<std::int64_t>(it->second.size()) != src)
        throw MissingInterpretation("table for '" + f->name + "' has the wrong size");
      return it->second;
    }
    case ArrKind::Indet: {
      if (!m.indet_element)
        throw MissingInterpretation("model has no element for the indeterminate");
      return {*m.indet_element};
    }
    case ArrKind::Id: {
      std::vector<std::int64_t> table(src);
      for (std::int64_t i = 0; i < src; ++i) table[i] = i;
      return table;
    }
    case ArrKind::Bang:
      return std::vector<std::int64_t>(src, 0);
    case ArrKind::Proj: {
      std::int64_t right = carrier_size(f->obj2, m);
      std::vector<std::int64_t> table(src);
      for (std::int64_t i = 0; i < src; ++i) table[i] = f->index == 1 ? i / right : i % right;
      return table;
    }
    case ArrKind::Eval: {
      std::int64_t size_b = carrier_size(f->obj2, m);
      std::int64_t fun_space = carrier_size(exponential(f->obj1, f->obj2), m);
      std::vector<std::int64_t> table(src);
      for (std::int64_t i = 0; i < src; ++i) {
        std::int64_t a = i / fun_space;
        std::int64_t h = i % fun_space;
        table[i] = fun_digit(h, a, size_b);
      }
      return table;
    }
    case ArrKind::Comp: {
      std::vector<std::int64_t> before = interpret_finite(f->sub2, m, sig);
      std::vector<std::int64_t> after = interpret_finite(f->sub1, m, sig);
      std::vector<std::int64_t> table(src);
      for (std::int64_t i = 0; i < src; ++i) table[i] = after[before[i]];
      return table;
    }
    case ArrKind::Pair: {
      std::vector<std::int64_t> fst = interpret_finite(f->sub1, m, sig);
      std::vector<std::int64_t> snd = interpret_finite(f->sub2, m, sig);
      std::int64_t right = carrier_size(type_of(f->sub2, sig).target, m);
      std::vector<std::int64_t> table(src);
      for (std::int64_t i = 0; i < src; ++i) table[i] = fst[i] * right + snd[i];
      return table;
    }
    case ArrKind::Curry: {
      std::vector<std::int64_t> body = interpret_finite(f->sub1, m, sig);
      std::int64_t size_a = carrier_size(f->obj1, m);
      std::int64_t size_c = carrier_size(f->obj2, m);
      ObjectPtr target_b = type_of(f->sub1, sig).target;
      std::int64_t size_b = carrier_size(target_b, m);
      carrier_size(exponential(f->obj1, target_b), m);  // size guard
      std::vector<std::int64_t> table(size_c);
      for (std::int64_t c = 0; c < size_c; ++c) {
        std::int64_t code = 0;
        std::int64_t weight = 1;
        for (std::int64_t a = 0; a < size_a; ++a) {
          code += body[a * size_c + c] * weight;
          weight *= size_b;
        }
        table[c] = code;
      }
      return table;
    }
  }
  throw InternalError("interpret_finite: unhandled arrow kind");
}

}  // namespace ccc
