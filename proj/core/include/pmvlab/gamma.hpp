#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pmvlab/finite_pmv.hpp"
#include "pmvlab/presentation.hpp"
#include "pmvlab/terms.hpp"

namespace pmvlab {

/// Γ(G,u) = [0,u] for a presented ℓ-group, with
///   x ⊕ y = (x+y) ∧ u,  x⁻ = u − x,  x∼ = −x + u,  x ⊙ y = (x−u+y) ∨ 0.
/// For ncmatrix blocks "+" is matrix multiplication, so x⁻ = u·x⁻¹ and x∼ = x⁻¹·u.
class GammaAlgebra {
 public:
  using element_type = GroupElement;

  explicit GammaAlgebra(SubdirectPresentation p);

  const SubdirectPresentation& presentation() const noexcept { return p_; }
  BlockList blocks() const noexcept { return p_.blocks; }

  bool contains(const GroupElement& x) const { return in_interval(p_, x); }
  const GroupElement& zero() const noexcept { return zero_; }
  const GroupElement& one() const noexcept { return p_.unit; }

  GroupElement oplus(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg_minus(const GroupElement& x) const;
  GroupElement neg_tilde(const GroupElement& x) const;
  GroupElement odot(const GroupElement& x, const GroupElement& y) const;
  GroupElement join(const GroupElement& x, const GroupElement& y) const { return group_join(blocks(), x, y); }
  GroupElement meet(const GroupElement& x, const GroupElement& y) const { return group_meet(blocks(), x, y); }
  bool leq(const GroupElement& x, const GroupElement& y) const { return group_leq(blocks(), x, y); }

 private:
  SubdirectPresentation p_;
  GroupElement zero_;
};

enum class GammaOp { oplus, odot, neg_minus, neg_tilde, join, meet };

/// Symbolic Γ operation; arguments must lie in the carrier (NotInCarrier).
GroupElement gamma_eval(const GammaAlgebra& ga, GammaOp op, std::span<const GroupElement> args);

/// (A1)-(A8) on seeded carrier samples, plus agreement of the term-defined
/// ∨, ∧, ≤ with the group lattice.
AxiomReport check_axioms_sampled(const GammaAlgebra& ga, std::size_t samples, std::uint64_t seed,
                                 AxiomOptions options = {});

/// Commutativity / symmetry on seeded samples; result marked sampled.
Classification classify(const GammaAlgebra& ga, std::size_t samples, std::uint64_t seed);

/// a₁ ⊕ ··· ⊕ a_k = (a₁ + ··· + a_k) ∧ u for k ≤ 4, on samples.
AxiomReport check_gamma_sums(const GammaAlgebra& ga, std::size_t samples, std::uint64_t seed);

/// ℓ-group laws on seeded group samples:
///   x + (y∨z) = (x+y)∨(x+z) and (y∨z) + x = (y+x)∨(z+x)
///   −(x∧y) = −x ∨ −y
///   x∧(y+z) ≤ (x∧y)+(x∧z) for positive x, y, z
///   |x+y| ≤ |x|+|y|+|x|
AxiomReport check_lgroup_laws(const SubdirectPresentation& p, std::size_t samples, std::uint64_t seed);

inline constexpr std::size_t kDefaultCarrierCap = 1024;

/// Γ(Z^m, (u₁..u_m)) tabulated. Carrier index is mixed-radix over the
/// coordinate box with the last coordinate fastest.
struct FiniteGamma {
  std::vector<int> units;
  std::vector<std::vector<int>> coords;
  FinitePMV algebra;

  Index index_of(std::span<const int> c) const;
};

FiniteGamma make_finite_gamma(std::span<const int> units, std::size_t cap = kDefaultCarrierCap);
inline FiniteGamma make_finite_gamma(std::initializer_list<int> units, std::size_t cap = kDefaultCarrierCap) {
  return make_finite_gamma(std::span<const int>(units.begin(), units.size()), cap);
}

/// The same algebra as an unlinked presentation over zlex¹ blocks.
SubdirectPresentation finite_gamma_presentation(std::span<const int> units);

}  // namespace pmvlab
