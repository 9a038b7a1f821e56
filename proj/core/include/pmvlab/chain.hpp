#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pmvlab/numeric.hpp"

namespace pmvlab {

enum class ChainType {
  zlex,      // Z^d under lexicographic order
  rational,  // Q
  ncmatrix,  // A(a,b) = [[a,b],[0,1]], a > 0, under matrix multiplication
};

struct ChainKind {
  ChainType type = ChainType::zlex;
  std::size_t depth = 1;  // zlex only

  static ChainKind zlex(std::size_t depth) { return {ChainType::zlex, depth}; }
  static ChainKind rational() { return {ChainType::rational, 1}; }
  static ChainKind ncmatrix() { return {ChainType::ncmatrix, 1}; }

  /// True for zlex chains of depth >= 2, which carry elements with zero leading coordinate.
  bool has_tail() const noexcept { return type == ChainType::zlex && depth >= 2; }

  friend bool operator==(const ChainKind&, const ChainKind&) = default;
};

std::string to_string(const ChainKind& kind);

using LexVector = std::vector<BigInt>;

/// The matrix A(a,b); the group operation is (a,b)(a',b') = (aa', ab'+b).
struct Affine {
  Rational a{1};
  Rational b{0};
  friend bool operator==(const Affine&, const Affine&) = default;
};

using ChainValue = std::variant<LexVector, Rational, Affine>;

/// An element of a finite product of chains, one value per block. Group
/// notation is additive even for ncmatrix blocks.
struct GroupElement {
  std::vector<ChainValue> blocks;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

using BlockList = std::span<const ChainKind>;

namespace chain {

ChainValue identity(const ChainKind& kind);
ChainValue add(const ChainKind& kind, const ChainValue& x, const ChainValue& y);
ChainValue negate(const ChainKind& kind, const ChainValue& x);
/// Three-way comparison in the chain's total order: <0, 0, >0.
int compare(const ChainKind& kind, const ChainValue& x, const ChainValue& y);
bool is_identity(const ChainKind& kind, const ChainValue& x);
bool conforms(const ChainKind& kind, const ChainValue& x);
/// Leading coordinate: first lex coordinate, the rational itself, or the a of A(a,b).
Rational leading(const ChainKind& kind, const ChainValue& x);
std::string render(const ChainValue& x);

}  // namespace chain

// Operations on products of chains, componentwise; order is the product order.

void check_shape(BlockList blocks, const GroupElement& x);
GroupElement group_identity(BlockList blocks);
GroupElement group_add(BlockList blocks, const GroupElement& x, const GroupElement& y);
GroupElement group_negate(BlockList blocks, const GroupElement& x);
GroupElement group_sub(BlockList blocks, const GroupElement& x, const GroupElement& y);  // x + (−y)
GroupElement group_meet(BlockList blocks, const GroupElement& x, const GroupElement& y);
GroupElement group_join(BlockList blocks, const GroupElement& x, const GroupElement& y);
bool group_leq(BlockList blocks, const GroupElement& x, const GroupElement& y);
bool group_is_identity(BlockList blocks, const GroupElement& x);
GroupElement group_multiple(BlockList blocks, std::size_t n, const GroupElement& x);
GroupElement positive_part(BlockList blocks, const GroupElement& x);  // x ∨ 0
GroupElement negative_part(BlockList blocks, const GroupElement& x);  // −x ∨ 0
GroupElement absolute(BlockList blocks, const GroupElement& x);       // x⁺ + x⁻

enum class GroupOp { add, sub, negate, meet, join, abs, pos, neg_part };

/// Exact evaluation with arity and shape checks (ShapeMismatch on failure).
GroupElement group_eval(BlockList blocks, GroupOp op, std::span<const GroupElement> args);

std::string render(const GroupElement& x);

}  // namespace pmvlab
