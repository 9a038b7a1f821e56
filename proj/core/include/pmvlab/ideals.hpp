#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmvlab/finite_pmv.hpp"

namespace pmvlab {

inline constexpr std::size_t kDefaultIdealCap = 64;

bool is_ideal(const FinitePMV& m, const CarrierSet& s);

/// Least ideal containing x: closure under ⊕ and down-sets.
CarrierSet ideal_closure(const FinitePMV& m, const CarrierSet& x);

/// x ⊕ I = I ⊕ x for every x.
bool is_normal(const FinitePMV& m, const CarrierSet& ideal);

/// Least normal ideal containing x.
CarrierSet generated_normal_ideal(const FinitePMV& m, const CarrierSet& x);

/// {a ⊕ b | a ∈ A, b ∈ B}
CarrierSet oplus_set(const FinitePMV& m, const CarrierSet& a, const CarrierSet& b);
/// {x | x ≤ a ⊕ b for some a ∈ A, b ∈ B}
CarrierSet sum_set(const FinitePMV& m, const CarrierSet& a, const CarrierSet& b);

/// X⊥ = {y | x ∧ y = 0 for all x ∈ X}
CarrierSet polar(const FinitePMV& m, const CarrierSet& x);
inline CarrierSet polar_of(const FinitePMV& m, Index a) { return polar(m, singleton(m.size(), a)); }

/// Proper, and x ∧ y ∈ I implies x ∈ I or y ∈ I.
bool is_prime(const FinitePMV& m, const CarrierSet& ideal);
/// Proper, and x ⊙ y⁻ ∈ I or y ⊙ x⁻ ∈ I for all x, y.
bool is_prime_by_residuals(const FinitePMV& m, const CarrierSet& ideal);

/// I = ↓a for a Boolean a.
std::optional<Index> summand_witness(const FinitePMV& m, const CarrierSet& ideal);

struct IdealClassification {
  bool normal = false;
  bool prime = false;
  bool polar = false;
  bool summand = false;
};

struct ClassifiedIdeal {
  CarrierSet members;
  IdealClassification flags;
};

/// Every ideal, in canonical order (cardinality, then member list).
std::vector<ClassifiedIdeal> enumerate_ideals(const FinitePMV& m, std::size_t cap = kDefaultIdealCap);

/// ρ(M) with its Boolean lattice operations, as indices into `polars`.
struct PolarLattice {
  std::vector<CarrierSet> polars;
  std::vector<std::vector<std::size_t>> meet;
  std::vector<std::vector<std::size_t>> join;
  std::vector<std::size_t> complement;

  std::size_t index_of(const CarrierSet& s) const;
};

PolarLattice polar_lattice(const FinitePMV& m, std::size_t cap = kDefaultIdealCap);

struct Quotient {
  FinitePMV algebra;
  std::vector<Index> projection;  // parent index -> class index
  bool degenerate = false;
};

/// M / I via x ~ y iff x⊙y⁻, y⊙x⁻ ∈ I; classes ordered by least member.
Quotient quotient(const FinitePMV& m, const CarrierSet& ideal);

struct RepresentabilityReport {
  bool representable = true;
  std::optional<Index> witness;  // a whose polar is not normal
  std::string detail;
};

RepresentabilityReport is_representable(const FinitePMV& m);

/// Smallest family of proper prime normal ideals meeting in {0}; among
/// families of that size the lexicographically first in canonical order.
std::vector<CarrierSet> subdirect_decomposition(const FinitePMV& m, std::size_t cap = kDefaultIdealCap);

/// Normal ideals of Γ(Z^k,u) against ℓ-ideals of Z^k (coordinate-subset
/// kernels) on the box [−scale·u, scale·u].
struct CorrespondenceRow {
  CarrierSet ideal;                   // normal ideal of the finite Γ
  std::vector<std::size_t> coordinates;  // free coordinates of the ℓ-ideal
};

struct CorrespondenceReport {
  std::size_t normal_ideals = 0;
  std::size_t l_ideals = 0;
  bool mutually_inverse = false;
  bool order_preserving = false;
  std::vector<CorrespondenceRow> table;
  std::string detail;
};

CorrespondenceReport ideal_group_correspondence(std::span<const int> units, int scale = 1,
                                                std::size_t cap = kDefaultIdealCap);

}  // namespace pmvlab
