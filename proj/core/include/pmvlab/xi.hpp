#pragma once

#include <vector>

#include "pmvlab/finite_pmv.hpp"

namespace pmvlab {

/// M ≅ Γ(Z^m, (k₁..k_m)). iso[g] is the M-index of the carrier element with
/// index g in make_finite_gamma(chain_units).
struct XiResult {
  std::vector<int> chain_units;
  std::vector<Index> iso;
};

/// Splits a finite MV-algebra along the atoms of its Boolean skeleton; every
/// factor ↓a must be a chain. Units are sorted ascending (ties by atom index).
XiResult xi_finite(const FinitePMV& m);

}  // namespace pmvlab
