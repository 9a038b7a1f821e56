#include "pmvlab/summands.hpp"

#include <algorithm>

namespace pmvlab {

std::vector<SummandDecomposition> summand_ideals(const FinitePMV& m) {
  std::vector<SummandDecomposition> out;
  for (auto a : boolean_skeleton(m)) {
    const auto b = m.neg_minus(a);
    out.push_back({m.down_set(a), m.down_set(b), a, b});
  }
  return out;
}

std::vector<std::pair<CarrierSet, CarrierSet>> summand_pairs_by_definition(const FinitePMV& m, std::size_t cap) {
  std::vector<CarrierSet> normal;
  for (auto& ideal : enumerate_ideals(m, cap))
    if (ideal.flags.normal) normal.push_back(std::move(ideal.members));
  const auto bottom = singleton(m.size(), m.zero());
  const auto top = full_set(m.size());
  std::vector<std::pair<CarrierSet, CarrierSet>> out;
  for (const auto& i : normal)
    for (const auto& j : normal)
      if ((i & j) == bottom && generated_normal_ideal(m, i | j) == top) out.emplace_back(i, j);
  return out;
}

std::pair<Index, Index> decompose(const FinitePMV& m, const CarrierSet& summand, Index x) {
  if (!m.contains(x)) throw Error(ErrorCode::out_of_carrier, "element index out of range");
  const auto w = summand_witness(m, summand);
  if (!w) throw Error(ErrorCode::not_summand, to_string(summand) + " is not a summand ideal");
  const auto a = m.meet(x, *w);
  const auto b = m.meet(x, m.neg_minus(*w));
  if (m.oplus(a, b) != x) throw Error(ErrorCode::internal_inconsistency, "decomposition does not recombine");
  return {a, b};
}

SumBooleanIso sum_boolean_iso(const FinitePMV& m) {
  SumBooleanIso iso;
  iso.booleans = boolean_skeleton(m);
  for (auto a : iso.booleans) iso.images.push_back(m.down_set(a));
  auto fail = [](const std::string& what) { throw Error(ErrorCode::iso_failure, what); };

  std::vector<CarrierSet> sums;
  for (const auto& [i, j] : summand_pairs_by_definition(m)) sums.push_back(i);
  std::sort(sums.begin(), sums.end(), canonical_less);
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  auto images = iso.images;
  std::sort(images.begin(), images.end(), canonical_less);
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) fail("a ↦ ↓a is not injective");
  if (images != sums) fail("image of B(M) differs from Sum(M)");

  auto image_of = [&](Index a) { return m.down_set(a); };
  for (auto a : iso.booleans) {
    if (image_of(m.neg_minus(a)) != polar(m, image_of(a))) fail("complement is not sent to the polar");
    for (auto b : iso.booleans) {
      if (image_of(m.oplus(a, b)) != generated_normal_ideal(m, image_of(a) | image_of(b)))
        fail("⊕ is not sent to the generated normal ideal");
      if (image_of(m.odot(a, b)) != (image_of(a) & image_of(b))) fail("⊙ is not sent to intersection");
    }
  }
  return iso;
}

ProjectabilityReport classify_projectability(const FinitePMV& m, std::size_t cap) {
  ProjectabilityReport r{true, true, {}};
  for (Index a = 0; a < m.size(); ++a)
    if (!summand_witness(m, polar_of(m, a))) {
      r.projectable = false;
      r.witness = "a=" + std::to_string(a);
      break;
    }
  for (const auto& p : polar_lattice(m, cap).polars)
    if (!summand_witness(m, p)) {
      r.strongly_projectable = false;
      if (r.witness.empty()) r.witness = "polar " + to_string(p);
      break;
    }
  return r;
}

Index pseudocomplement(const FinitePMV& m, Index a) {
  if (!m.contains(a)) throw Error(ErrorCode::out_of_carrier, "element index out of range");
  const auto r = classify_projectability(m);
  if (!r.strongly_projectable) throw Error(ErrorCode::not_strongly_projectable, r.witness);
  return *summand_witness(m, polar_of(m, a));
}

std::vector<GroupElement> boolean_elements(const SubdirectPresentation& p) {
  const auto k = p.linkage.size();
  if (k > kMaxEnumeratedBlocks) throw Error(ErrorCode::not_enumerable, "too many linkage classes");
  std::vector<GroupElement> out;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    BlockSet s(p.blocks.size());
    for (std::size_t c = 0; c < k; ++c)
      if (mask >> c & 1ul)
        for (auto b : p.linkage[c]) s.set(b);
    out.push_back(restrict_to(p, p.unit, s));
  }
  return out;
}

std::vector<SymbolicSummand> summand_ideals(const SubdirectPresentation& p) {
  std::vector<SymbolicSummand> out;
  for (auto& w : boolean_elements(p)) {
    auto s = support(p, w);
    auto c = restrict_to(p, p.unit, ~s);
    out.push_back({std::move(s), std::move(w), std::move(c)});
  }
  return out;
}

std::pair<GroupElement, GroupElement> decompose(const GammaAlgebra& ga, const GroupElement& witness,
                                                const GroupElement& x) {
  if (!ga.contains(x)) throw Error(ErrorCode::not_in_carrier, render(x) + " is not in [0,u]");
  if (!ga.contains(witness) || !is_boolean(ga, witness))
    throw Error(ErrorCode::not_summand, render(witness) + " is not a Boolean element");
  auto a = ga.meet(x, witness);
  auto b = ga.meet(x, ga.neg_minus(witness));
  if (!(ga.oplus(a, b) == x)) throw Error(ErrorCode::internal_inconsistency, "decomposition does not recombine");
  return {std::move(a), std::move(b)};
}

ProjectabilityReport classify_projectability(const SubdirectPresentation& p) {
  require_valid(p);
  ProjectabilityReport r{true, true, {}};
  for (const auto& a : achievable_supports(p))
    if (!is_union_of_classes(p, polar_complement(p, a))) {
      r.projectable = false;
      r.witness = "a=" + render(support_element(p, a));
      break;
    }
  for (const auto& t : polar_supports(p))
    if (!is_union_of_classes(p, t)) {
      r.strongly_projectable = false;
      if (r.witness.empty()) r.witness = "polar support " + to_string(t);
      break;
    }
  return r;
}

GroupElement pseudocomplement(const SubdirectPresentation& p, const GroupElement& a) {
  const auto r = classify_projectability(p);
  if (!r.strongly_projectable) throw Error(ErrorCode::not_strongly_projectable, r.witness);
  return restrict_to(p, p.unit, polar_complement(p, support(p, a)));
}

}  // namespace pmvlab
