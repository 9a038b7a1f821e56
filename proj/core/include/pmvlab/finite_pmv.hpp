#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pmvlab/carrier_set.hpp"
#include "pmvlab/terms.hpp"

namespace pmvlab {

using Index = std::size_t;

/// An explicit finite pseudo MV-algebra given by its ⊕ table and negation
/// tables. Construction validates shapes and ranges only; axioms are checked
/// separately so candidate tables can be inspected. The induced order and
/// the derived ⊙, ∨, ∧ are tabulated once.
class FinitePMV {
 public:
  using element_type = Index;

  FinitePMV(std::vector<std::vector<Index>> oplus, std::vector<Index> neg_minus,
            std::vector<Index> neg_tilde, Index zero, Index one);

  std::size_t size() const noexcept { return size_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }
  bool contains(Index x) const noexcept { return x < size_; }

  Index oplus(Index x, Index y) const { return oplus_[x * size_ + y]; }
  Index neg_minus(Index x) const { return neg_minus_[x]; }
  Index neg_tilde(Index x) const { return neg_tilde_[x]; }
  Index odot(Index x, Index y) const { return odot_[x * size_ + y]; }
  Index join(Index x, Index y) const { return join_[x * size_ + y]; }
  Index meet(Index x, Index y) const { return meet_[x * size_ + y]; }
  bool leq(Index x, Index y) const { return order_[x].test(y); }

  /// {y | x ≤ y} as a bit row.
  const CarrierSet& up_set(Index x) const { return order_[x]; }
  CarrierSet down_set(Index x) const;

  std::vector<std::vector<Index>> oplus_table() const;
  const std::vector<Index>& neg_minus_table() const noexcept { return neg_minus_; }
  const std::vector<Index>& neg_tilde_table() const noexcept { return neg_tilde_; }

  friend bool operator==(const FinitePMV& a, const FinitePMV& b) {
    return a.size_ == b.size_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.oplus_ == b.oplus_ &&
           a.neg_minus_ == b.neg_minus_ && a.neg_tilde_ == b.neg_tilde_;
  }

 private:
  using Cell = std::uint32_t;

  std::size_t size_;
  std::vector<Cell> oplus_;
  std::vector<Index> neg_minus_;
  std::vector<Index> neg_tilde_;
  Index zero_;
  Index one_;
  std::vector<Cell> odot_;
  std::vector<Cell> join_;
  std::vector<Cell> meet_;
  std::vector<CarrierSet> order_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<Index> witness;             // carrier indices (finite algebras)
  std::vector<std::string> elements;      // rendered elements (symbolic algebras)
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
  std::size_t instances = 0;  // triples or samples examined
};

struct AxiomOptions {
  bool first_only = false;
};

/// Exhaustive (A1)-(A8) plus lattice-order laws: partial order, bounds,
/// ∨ and ∧ are the order's lub/glb, distributivity.
AxiomReport check_axioms(const FinitePMV& m, AxiomOptions options = {});

/// The Boolean elements, in carrier order.
std::vector<Index> boolean_skeleton(const FinitePMV& m);

struct Classification {
  bool commutative = false;
  bool symmetric = false;
  bool sampled = false;
};

Classification classify(const FinitePMV& m);

/// Splits x ≤ a ⊕ b as x = a1 ⊕ b1 with a1 ≤ a, b1 ≤ b; the smallest a1 index wins.
std::pair<Index, Index> riesz_split(const FinitePMV& m, Index x, Index a, Index b);

/// Carrier isomorphism check: iso[i] is the image of i in `b`.
bool is_isomorphism(const FinitePMV& a, const FinitePMV& b, const std::vector<Index>& iso);

}  // namespace pmvlab
