#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "pmvlab/chain.hpp"
#include "pmvlab/error.hpp"

namespace pmvlab {

using Linkage = std::vector<std::vector<std::size_t>>;

/// A finitely presented ℓ-subgroup G of a product of chains: g ∈ G iff
/// leading coordinates agree inside every linkage class. `unit` is the
/// strong unit of G.
struct SubdirectPresentation {
  std::vector<ChainKind> blocks;
  Linkage linkage;
  GroupElement unit;

  friend bool operator==(const SubdirectPresentation&, const SubdirectPresentation&) = default;
};

inline constexpr std::size_t kDefaultClosureSamples = 10000;
inline constexpr std::int64_t kDefaultBoxRadius = 8;

/// Sorts each class and orders classes by their smallest member.
Linkage normalize_linkage(Linkage linkage);

/// class_index[b] is the linkage class containing block b.
std::vector<std::size_t> class_index(const SubdirectPresentation& p);

/// Shape check plus leading-coordinate linkage.
bool in_group(const SubdirectPresentation& p, const GroupElement& x);

/// 0 ≤ x ≤ u and x ∈ G.
bool in_interval(const SubdirectPresentation& p, const GroupElement& x);

struct PresentationReport {
  bool valid = true;
  std::optional<ErrorCode> error;
  std::string detail;
  std::optional<std::pair<GroupElement, GroupElement>> witness;  // closure counterexample
  std::size_t samples_checked = 0;
};

/// Structural checks on the partition and the unit, then a seeded sampled
/// check that G is closed under +, −, ∧, ∨.
PresentationReport validate_presentation(const SubdirectPresentation& p,
                                         std::size_t samples = kDefaultClosureSamples,
                                         std::uint64_t seed = 0);

/// Structural checks only; throws the first failure as an Error.
void require_valid(const SubdirectPresentation& p);

/// Seeded generator of elements of G inside a coordinate box.
class ElementSampler {
 public:
  struct Options {
    std::int64_t radius = kDefaultBoxRadius;
    std::int64_t max_denominator = 8;
  };

  ElementSampler(const SubdirectPresentation& p, std::uint64_t seed);
  ElementSampler(const SubdirectPresentation& p, std::uint64_t seed, Options options);

  GroupElement group_element();
  GroupElement positive_element();
  /// An element of [0,u] ∩ G: either |g| ∧ u or u − (|g| ∧ u).
  GroupElement carrier_element();
  /// A carrier element different from 0 (resamples; falls back to u).
  GroupElement nonzero_carrier_element();

  std::mt19937_64& engine() { return rng_; }

 private:
  BigInt integer(std::int64_t lo, std::int64_t hi);
  Rational rational(std::int64_t radius);

  const SubdirectPresentation* p_;
  Options options_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> class_of_;
};

}  // namespace pmvlab
