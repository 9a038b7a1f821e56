#include "pmvlab/chain.hpp"

#include "pmvlab/error.hpp"

namespace pmvlab {

std::string to_string(const ChainKind& kind) {
  switch (kind.type) {
    case ChainType::zlex: return "zlex" + std::to_string(kind.depth);
    case ChainType::rational: return "q";
    case ChainType::ncmatrix: return "ncmatrix";
  }
  return "?";
}

namespace chain {

ChainValue identity(const ChainKind& kind) {
  switch (kind.type) {
    case ChainType::zlex: return LexVector(kind.depth, BigInt(0));
    case ChainType::rational: return Rational(0);
    case ChainType::ncmatrix: return Affine{};
  }
  return Rational(0);
}

ChainValue add(const ChainKind& kind, const ChainValue& x, const ChainValue& y) {
  switch (kind.type) {
    case ChainType::zlex: {
      const auto& a = std::get<LexVector>(x);
      const auto& b = std::get<LexVector>(y);
      LexVector out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
      return out;
    }
    case ChainType::rational:
      return Rational(std::get<Rational>(x) + std::get<Rational>(y));
    case ChainType::ncmatrix: {
      const auto& p = std::get<Affine>(x);
      const auto& q = std::get<Affine>(y);
      return Affine{p.a * q.a, p.a * q.b + p.b};
    }
  }
  return x;
}

ChainValue negate(const ChainKind& kind, const ChainValue& x) {
  switch (kind.type) {
    case ChainType::zlex: {
      LexVector out = std::get<LexVector>(x);
      for (auto& c : out) c = -c;
      return out;
    }
    case ChainType::rational:
      return Rational(-std::get<Rational>(x));
    case ChainType::ncmatrix: {
      const auto& p = std::get<Affine>(x);
      // A(a,b)⁻¹ = A(1/a, −b/a)
      return Affine{Rational(1) / p.a, -p.b / p.a};
    }
  }
  return x;
}

int compare(const ChainKind& kind, const ChainValue& x, const ChainValue& y) {
  switch (kind.type) {
    case ChainType::zlex: {
      const auto& a = std::get<LexVector>(x);
      const auto& b = std::get<LexVector>(y);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
      }
      return 0;
    }
    case ChainType::rational: {
      const auto& a = std::get<Rational>(x);
      const auto& b = std::get<Rational>(y);
      return a < b ? -1 : (b < a ? 1 : 0);
    }
    case ChainType::ncmatrix: {
      // x ≤ y iff x⁻¹y = A(a'/a, (b'−b)/a) is in the positive cone; since
      // a > 0 this is the lexicographic order on (a, b).
      const auto& p = std::get<Affine>(x);
      const auto& q = std::get<Affine>(y);
      if (p.a != q.a) return p.a < q.a ? -1 : 1;
      if (p.b != q.b) return p.b < q.b ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool is_identity(const ChainKind& kind, const ChainValue& x) { return compare(kind, x, identity(kind)) == 0; }

bool conforms(const ChainKind& kind, const ChainValue& x) {
  switch (kind.type) {
    case ChainType::zlex:
      return std::holds_alternative<LexVector>(x) && std::get<LexVector>(x).size() == kind.depth;
    case ChainType::rational:
      return std::holds_alternative<Rational>(x);
    case ChainType::ncmatrix:
      return std::holds_alternative<Affine>(x) && std::get<Affine>(x).a > 0;
  }
  return false;
}

Rational leading(const ChainKind& kind, const ChainValue& x) {
  switch (kind.type) {
    case ChainType::zlex: return Rational(std::get<LexVector>(x).front());
    case ChainType::rational: return std::get<Rational>(x);
    case ChainType::ncmatrix: return std::get<Affine>(x).a;
  }
  return Rational(0);
}

namespace {

std::string plain(const Rational& r) {
  if (is_integral(r)) return boost::multiprecision::numerator(r).str();
  return format_rational(r);
}

}  // namespace

std::string render(const ChainValue& x) {
  if (auto v = std::get_if<LexVector>(&x)) {
    std::string out = "(";
    for (std::size_t i = 0; i < v->size(); ++i) out += (i ? "," : "") + (*v)[i].str();
    return out + ")";
  }
  if (auto r = std::get_if<Rational>(&x)) return plain(*r);
  const auto& p = std::get<Affine>(x);
  return "A(" + plain(p.a) + "," + plain(p.b) + ")";
}

}  // namespace chain

void check_shape(BlockList blocks, const GroupElement& x) {
  if (x.blocks.size() != blocks.size())
    throw Error(ErrorCode::shape_mismatch, "element has " + std::to_string(x.blocks.size()) +
                                               " blocks, expected " + std::to_string(blocks.size()));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (!chain::conforms(blocks[i], x.blocks[i]))
      throw Error(ErrorCode::shape_mismatch, "block " + std::to_string(i) + " does not match " + to_string(blocks[i]));
}

GroupElement group_identity(BlockList blocks) {
  GroupElement e;
  for (const auto& k : blocks) e.blocks.push_back(chain::identity(k));
  return e;
}

namespace {

template <class F>
GroupElement zip(BlockList blocks, const GroupElement& x, const GroupElement& y, F f) {
  GroupElement out;
  out.blocks.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) out.blocks.push_back(f(blocks[i], x.blocks[i], y.blocks[i]));
  return out;
}

}  // namespace

GroupElement group_add(BlockList blocks, const GroupElement& x, const GroupElement& y) {
  return zip(blocks, x, y, [](const ChainKind& k, const ChainValue& a, const ChainValue& b) { return chain::add(k, a, b); });
}

GroupElement group_negate(BlockList blocks, const GroupElement& x) {
  GroupElement out;
  for (std::size_t i = 0; i < blocks.size(); ++i) out.blocks.push_back(chain::negate(blocks[i], x.blocks[i]));
  return out;
}

GroupElement group_sub(BlockList blocks, const GroupElement& x, const GroupElement& y) {
  return group_add(blocks, x, group_negate(blocks, y));
}

GroupElement group_meet(BlockList blocks, const GroupElement& x, const GroupElement& y) {
  return zip(blocks, x, y, [](const ChainKind& k, const ChainValue& a, const ChainValue& b) {
    return chain::compare(k, a, b) <= 0 ? a : b;
  });
}

GroupElement group_join(BlockList blocks, const GroupElement& x, const GroupElement& y) {
  return zip(blocks, x, y, [](const ChainKind& k, const ChainValue& a, const ChainValue& b) {
    return chain::compare(k, a, b) >= 0 ? a : b;
  });
}

bool group_leq(BlockList blocks, const GroupElement& x, const GroupElement& y) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (chain::compare(blocks[i], x.blocks[i], y.blocks[i]) > 0) return false;
  return true;
}

bool group_is_identity(BlockList blocks, const GroupElement& x) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (!chain::is_identity(blocks[i], x.blocks[i])) return false;
  return true;
}

GroupElement group_multiple(BlockList blocks, std::size_t n, const GroupElement& x) {
  GroupElement acc = group_identity(blocks);
  for (std::size_t k = 0; k < n; ++k) acc = group_add(blocks, acc, x);
  return acc;
}

GroupElement positive_part(BlockList blocks, const GroupElement& x) {
  return group_join(blocks, x, group_identity(blocks));
}

GroupElement negative_part(BlockList blocks, const GroupElement& x) {
  return group_join(blocks, group_negate(blocks, x), group_identity(blocks));
}

GroupElement absolute(BlockList blocks, const GroupElement& x) {
  return group_add(blocks, positive_part(blocks, x), negative_part(blocks, x));
}

GroupElement group_eval(BlockList blocks, GroupOp op, std::span<const GroupElement> args) {
  const bool unary = op == GroupOp::negate || op == GroupOp::abs || op == GroupOp::pos || op == GroupOp::neg_part;
  if (args.size() != (unary ? 1u : 2u)) throw Error(ErrorCode::shape_mismatch, "wrong number of arguments");
  for (const auto& a : args) check_shape(blocks, a);
  switch (op) {
    case GroupOp::add: return group_add(blocks, args[0], args[1]);
    case GroupOp::sub: return group_sub(blocks, args[0], args[1]);
    case GroupOp::negate: return group_negate(blocks, args[0]);
    case GroupOp::meet: return group_meet(blocks, args[0], args[1]);
    case GroupOp::join: return group_join(blocks, args[0], args[1]);
    case GroupOp::abs: return absolute(blocks, args[0]);
    case GroupOp::pos: return positive_part(blocks, args[0]);
    case GroupOp::neg_part: return negative_part(blocks, args[0]);
  }
  throw Error(ErrorCode::shape_mismatch, "unknown group operation");
}

std::string render(const GroupElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.blocks.size(); ++i) out += (i ? "," : "") + chain::render(x.blocks[i]);
  return out + ")";
}

}  // namespace pmvlab
