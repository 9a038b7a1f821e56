#pragma once

#include <vector>

#include "pmvlab/carrier_set.hpp"
#include "pmvlab/presentation.hpp"

namespace pmvlab {

/// A set of block indices.
using BlockSet = CarrierSet;

inline constexpr std::size_t kMaxEnumeratedBlocks = 20;

/// Blocks where x is not the identity. NotInG if x ∉ G.
BlockSet support(const SubdirectPresentation& p, const GroupElement& x);

/// S is the support of some element of G: every linkage class lies inside S
/// or meets S only in zlex blocks of depth ≥ 2.
bool is_achievable(const SubdirectPresentation& p, const BlockSet& s);

/// Largest achievable subset of S.
BlockSet interior(const SubdirectPresentation& p, const BlockSet& s);

/// Support of the polar of any element (or ideal) with support T.
BlockSet polar_complement(const SubdirectPresentation& p, const BlockSet& t);

bool is_polar_support(const SubdirectPresentation& p, const BlockSet& t);

/// Achievable supports by brute force over all subsets of Λ.
std::vector<BlockSet> achievable_supports(const SubdirectPresentation& p);

/// Polar supports, assembled class by class.
std::vector<BlockSet> polar_supports(const SubdirectPresentation& p);

/// Polar supports as {T⊥ | T achievable}, by brute force.
std::vector<BlockSet> polar_supports_by_definition(const SubdirectPresentation& p);

/// Minimal nonempty polar supports.
std::vector<BlockSet> polar_atoms(const SubdirectPresentation& p);

struct SupportLattice {
  std::size_t blocks = 0;
  std::vector<BlockSet> achievable;
  std::vector<BlockSet> polar_supports;
  std::vector<BlockSet> atoms;
};

SupportLattice support_lattice(const SubdirectPresentation& p);

/// A carrier element with exactly the given (achievable) support.
GroupElement support_element(const SubdirectPresentation& p, const BlockSet& s);

/// x with every block outside S replaced by the identity.
GroupElement restrict_to(const SubdirectPresentation& p, const GroupElement& x, const BlockSet& s);

/// Union of whole linkage classes.
bool is_union_of_classes(const SubdirectPresentation& p, const BlockSet& s);

}  // namespace pmvlab
