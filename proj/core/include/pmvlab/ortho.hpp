#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmvlab/gamma.hpp"
#include "pmvlab/ideals.hpp"
#include "pmvlab/subalgebra.hpp"
#include "pmvlab/summands.hpp"
#include "pmvlab/support.hpp"

namespace pmvlab {

/// An ℓ-embedding of linkage presentations by coordinates: super block b
/// carries sub block source[b]. Sub blocks that are not carried must be
/// zlex¹ blocks linked to a carried block, so they are recoverable.
struct Inclusion {
  SubdirectPresentation sub;
  SubdirectPresentation super;
  std::vector<std::size_t> source;

  GroupElement image(const GroupElement& x) const;
  std::optional<GroupElement> preimage(const GroupElement& y) const;
  bool contains(const GroupElement& y) const { return preimage(y).has_value(); }

  /// "coordinate-identity", "coordinate-projection" or "coordinate-embedding".
  std::string kind() const;
};

/// Kinds must be equal or zlex¹ into q. Target classes must come from a single
/// source class, and the units must correspond.
Inclusion make_inclusion(SubdirectPresentation sub, SubdirectPresentation super, std::vector<std::size_t> source);
Inclusion identity_inclusion(const SubdirectPresentation& p);

inline constexpr std::size_t kMaxIndexBlocks = 64;

struct OrthoResult {
  SubdirectPresentation completed;
  Inclusion embedding;
};

/// Keeps the blocks covered by polar atoms and refines every linkage class
/// along the atoms. NotFiniteIndex beyond kMaxIndexBlocks.
OrthoResult orthocomplete_group(const SubdirectPresentation& p);

/// Finite algebras are their own orthocompletion.
struct FiniteOrtho {
  const FinitePMV* algebra;
  std::vector<Index> embedding;
};
FiniteOrtho orthocompletion(const FinitePMV& m);

inline OrthoResult orthocompletion(const GammaAlgebra& ga) { return orthocomplete_group(ga.presentation()); }

enum class Verdict { large, not_large, inconclusive };
std::string_view to_string(Verdict v);

struct LargenessEntry {
  std::string element;
  std::size_t n = 0;
  std::string witness;
};

struct LargenessCertificate {
  Verdict verdict = Verdict::large;
  std::vector<LargenessEntry> entries;
  std::string failure;
};

inline constexpr std::size_t kDefaultLargeBound = 16;

/// Exhaustive over nonzero y ∈ B; A given as a subalgebra carrier of B.
LargenessCertificate is_large(const FinitePMV& b, const CarrierSet& a, std::size_t n_bound = kDefaultLargeBound);

struct LargeWitness {
  std::size_t n = 0;
  GroupElement x;
};

/// Least n ≤ n_bound with a nonzero x ∈ A, x ≤ n.y. Candidates in order: y
/// itself, the least tail element on a deep block where n.y is positive,
/// a class indicator ∧ u, n.y restricted to one block.
std::optional<LargeWitness> find_large_witness(const Inclusion& inc, const GroupElement& y, std::size_t n_bound);

struct SampleOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::int64_t radius = kDefaultBoxRadius;
  std::int64_t max_denominator = 12;
};

/// Probes the support elements of B plus seeded samples. BoundExhausted
/// makes the verdict inconclusive.
LargenessCertificate is_large(const Inclusion& inc, const SampleOptions& options = {},
                              std::size_t n_bound = kDefaultLargeBound);

struct OrthocompleteReport {
  bool orthocomplete = false;
  bool strongly_projectable = false;
  std::size_t families = 0;
  std::string detail;
};

/// Strong projectability plus lubs of every disjoint family of nonzero elements (size ≤ max_family).
OrthocompleteReport is_orthocomplete(const FinitePMV& m, std::size_t max_family = 8);

/// Strong projectability plus lubs of sampled families of per-atom elements.
OrthocompleteReport is_orthocomplete(const SubdirectPresentation& p, const SampleOptions& options = {},
                                     std::size_t max_family = 8);

struct LubReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Every S ⊆ A with 1 ≤ |S| ≤ max_set: lub in A equals lub in B. NotLarge first.
LubReport lub_preservation_check(const FinitePMV& b, const CarrierSet& a, std::size_t max_set = 4);
LubReport lub_preservation_check(const Inclusion& inc, std::size_t max_set = 4, const SampleOptions& options = {});

struct PolarCorrespondence {
  std::size_t sub_polars = 0;
  std::size_t super_polars = 0;
  bool shared_witness_checked = false;
  /// phi[i] indexes the sub polar matched with super polar i.
  std::vector<std::size_t> phi;
};

/// Φ(I) = I ∩ A and Ψ(J) = (J^{⊥A})^{⊥B} checked mutually inverse and
/// monotone. NotLarge, or CorrespondenceFailure with a witness.
PolarCorrespondence polar_correspondence(const FinitePMV& b, const CarrierSet& a);
PolarCorrespondence polar_correspondence(const Inclusion& inc);

inline constexpr std::size_t kExtensionIterationCap = 64;

struct FiniteExtension {
  CarrierSet carrier;
  std::size_t iterations = 0;
  bool strongly_projectable = false;
  bool minimal = false;
};

/// Closure of A inside a strongly projectable B under the Boolean witnesses
/// of (J^{⊥D})^{⊥B}; minimality by subalgebra search.
FiniteExtension minimal_projectable_extension(const FinitePMV& b, const CarrierSet& a);
inline FiniteExtension minimal_projectable_extension(const FinitePMV& m) {
  return minimal_projectable_extension(m, full_set(m.size()));
}

struct SymbolicExtension {
  SubdirectPresentation extension;  // on the blocks of the orthocompletion
  OrthoResult ortho;
  std::size_t iterations = 0;
  bool strongly_projectable = false;
  bool contains_source = false;
  bool within_orthocompletion = false;
};

/// Subalgebras of Γ(O(G),u) are tracked as linkage coarsenings; each
/// Boolean witness splits classes along its support. NonTermination at the cap.
SymbolicExtension minimal_projectable_extension(const SubdirectPresentation& p);

/// Least n ≤ n_bound with x ≤ n·u.
std::optional<std::size_t> strong_unit_multiple(const SubdirectPresentation& p, const GroupElement& x,
                                                std::size_t n_bound);

struct StrongUnitReport {
  std::size_t checked = 0;
  std::size_t max_n = 0;
  std::size_t exhausted = 0;  // samples with no n ≤ n_bound
  Verdict verdict = Verdict::large;
};

StrongUnitReport strong_unit_check(const OrthoResult& o, std::size_t n_bound = 64, const SampleOptions& options = {});

/// Sampled check that polars are normal ideals.
RepresentabilityReport is_representable(const SubdirectPresentation& p, const SampleOptions& options = {});

}  // namespace pmvlab
