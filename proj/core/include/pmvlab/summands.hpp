#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmvlab/gamma.hpp"
#include "pmvlab/ideals.hpp"
#include "pmvlab/support.hpp"

namespace pmvlab {

/// A = ↓witness and A⊥ = ↓complement_witness.
struct SummandDecomposition {
  CarrierSet ideal;
  CarrierSet complement;
  Index witness = 0;
  Index complement_witness = 0;
};

/// Sum(M), one entry per Boolean element in carrier order.
std::vector<SummandDecomposition> summand_ideals(const FinitePMV& m);

/// Pairs (I, J) of normal ideals with ⟨I ∪ J⟩ₙ = M and I ∩ J = {0}, by search.
std::vector<std::pair<CarrierSet, CarrierSet>> summand_pairs_by_definition(const FinitePMV& m,
                                                                           std::size_t cap = kDefaultIdealCap);

/// The unique x = a ⊕ b with a ∈ A, b ∈ A⊥. NotSummand if A ∉ Sum(M).
std::pair<Index, Index> decompose(const FinitePMV& m, const CarrierSet& summand, Index x);

struct SumBooleanIso {
  std::vector<Index> booleans;
  std::vector<CarrierSet> images;  // images[i] = ↓booleans[i]
};

/// a ↦ ↓a checked bijective onto Sum(M) and structure preserving; IsoFailure otherwise.
SumBooleanIso sum_boolean_iso(const FinitePMV& m);

/// The Boolean b with a⊥ = ↓b. NotStronglyProjectable if M is not.
Index pseudocomplement(const FinitePMV& m, Index a);

struct ProjectabilityReport {
  bool projectable = false;
  bool strongly_projectable = false;
  std::string witness;  // offending element or polar, empty when both hold
};

ProjectabilityReport classify_projectability(const FinitePMV& m, std::size_t cap = kDefaultIdealCap);

// Symbolic algebras Γ(G,u) of linkage presentations.

/// Boolean elements: u on a union of linkage classes, 0 elsewhere. Ordered
/// by the bit mask over classes.
std::vector<GroupElement> boolean_elements(const SubdirectPresentation& p);

struct SymbolicSummand {
  BlockSet support;
  GroupElement witness;
  GroupElement complement_witness;
};

std::vector<SymbolicSummand> summand_ideals(const SubdirectPresentation& p);

/// (x ∧ w, x ∧ w⁻) for a Boolean w. NotSummand if w is not Boolean.
std::pair<GroupElement, GroupElement> decompose(const GammaAlgebra& ga, const GroupElement& witness,
                                                const GroupElement& x);

/// Strongly projectable iff every polar support is a union of classes;
/// projectable iff the polar support of every element is.
ProjectabilityReport classify_projectability(const SubdirectPresentation& p);

GroupElement pseudocomplement(const SubdirectPresentation& p, const GroupElement& a);

}  // namespace pmvlab
