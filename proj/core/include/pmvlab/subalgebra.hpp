#pragma once

#include <optional>
#include <vector>

#include "pmvlab/finite_pmv.hpp"

namespace pmvlab {

/// A subalgebra re-indexed as a standalone algebra; to_parent[i] is the
/// parent index of local element i (increasing).
struct FiniteSubalgebra {
  CarrierSet carrier;
  FinitePMV algebra;
  std::vector<Index> to_parent;
};

bool is_subalgebra(const FinitePMV& m, const CarrierSet& s);

/// Least subset containing gens, 0 and 1, closed under ⊕, ⁻ and ∼.
CarrierSet generated_subalgebra(const FinitePMV& m, const CarrierSet& gens);

/// Throws ClosureViolation if s is not a subalgebra.
FiniteSubalgebra induced_subalgebra(const FinitePMV& m, const CarrierSet& s);

/// All subalgebras in canonical order. CapExceeded above `cap` elements.
std::vector<CarrierSet> enumerate_subalgebras(const FinitePMV& m, std::size_t cap = 64);

/// An injective homomorphism a → b (image[i] for element i), by backtracking.
std::optional<std::vector<Index>> find_embedding(const FinitePMV& a, const FinitePMV& b);

}  // namespace pmvlab
