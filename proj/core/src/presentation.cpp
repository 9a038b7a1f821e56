#include "pmvlab/presentation.hpp"

#include <algorithm>

namespace pmvlab {

Linkage normalize_linkage(Linkage linkage) {
  for (auto& c : linkage) std::sort(c.begin(), c.end());
  std::sort(linkage.begin(), linkage.end());
  return linkage;
}

std::vector<std::size_t> class_index(const SubdirectPresentation& p) {
  std::vector<std::size_t> idx(p.blocks.size(), 0);
  for (std::size_t c = 0; c < p.linkage.size(); ++c)
    for (auto b : p.linkage[c])
      if (b < idx.size()) idx[b] = c;
  return idx;
}

bool in_group(const SubdirectPresentation& p, const GroupElement& x) {
  if (x.blocks.size() != p.blocks.size()) return false;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    if (!chain::conforms(p.blocks[i], x.blocks[i])) return false;
  for (const auto& cls : p.linkage) {
    if (cls.size() < 2) continue;
    const Rational lead = chain::leading(p.blocks[cls.front()], x.blocks[cls.front()]);
    for (auto b : cls)
      if (chain::leading(p.blocks[b], x.blocks[b]) != lead) return false;
  }
  return true;
}

bool in_interval(const SubdirectPresentation& p, const GroupElement& x) {
  return in_group(p, x) && group_leq(p.blocks, group_identity(p.blocks), x) && group_leq(p.blocks, x, p.unit);
}

namespace {

PresentationReport fail(ErrorCode code, std::string detail) {
  PresentationReport r;
  r.valid = false;
  r.error = code;
  r.detail = std::move(detail);
  return r;
}

PresentationReport structural(const SubdirectPresentation& p) {
  const std::size_t n = p.blocks.size();
  if (n == 0) return fail(ErrorCode::bad_partition, "presentation has no blocks");
  std::vector<int> seen(n, 0);
  for (const auto& cls : p.linkage) {
    if (cls.empty()) return fail(ErrorCode::bad_partition, "empty linkage class");
    for (auto b : cls) {
      if (b >= n) return fail(ErrorCode::bad_partition, "block index " + std::to_string(b) + " out of range");
      if (seen[b]++) return fail(ErrorCode::bad_partition, "block " + std::to_string(b) + " appears twice");
    }
    if (cls.size() > 1)
      for (auto b : cls)
        if (p.blocks[b].type != ChainType::zlex)
          return fail(ErrorCode::bad_partition, "only zlex blocks may be linked (block " + std::to_string(b) + ")");
  }
  for (std::size_t b = 0; b < n; ++b)
    if (!seen[b]) return fail(ErrorCode::bad_partition, "block " + std::to_string(b) + " is in no class");

  if (!in_group(p, p.unit)) return fail(ErrorCode::unit_not_in_group, "unit violates shape or linkage");

  for (std::size_t b = 0; b < n; ++b) {
    const auto& kind = p.blocks[b];
    const Rational lead = chain::leading(kind, p.unit.blocks[b]);
    const bool strong = kind.type == ChainType::zlex       ? lead >= 1
                        : kind.type == ChainType::rational ? lead > 0
                                                           : lead > 1;
    if (!strong)
      return fail(ErrorCode::unit_not_strong,
                  "unit block " + std::to_string(b) + " is not strictly positive in its leading coordinate");
  }
  return {};
}

}  // namespace

PresentationReport validate_presentation(const SubdirectPresentation& p, std::size_t samples, std::uint64_t seed) {
  auto report = structural(p);
  if (!report.valid) return report;
  ElementSampler sampler(p, seed);
  const auto& blocks = p.blocks;
  for (std::size_t s = 0; s < samples; ++s) {
    auto x = sampler.group_element();
    auto y = sampler.group_element();
    for (const auto& r : {group_meet(blocks, x, y), group_join(blocks, x, y), group_add(blocks, x, y),
                          group_sub(blocks, x, y)}) {
      if (!in_group(p, r)) {
        report = fail(ErrorCode::closure_violation, "G is not closed under the lattice-group operations");
        report.witness = std::make_pair(x, y);
        report.samples_checked = s + 1;
        return report;
      }
    }
  }
  report.samples_checked = samples;
  return report;
}

void require_valid(const SubdirectPresentation& p) {
  auto r = structural(p);
  if (!r.valid) throw Error(*r.error, r.detail);
}

ElementSampler::ElementSampler(const SubdirectPresentation& p, std::uint64_t seed)
    : ElementSampler(p, seed, Options{}) {}

ElementSampler::ElementSampler(const SubdirectPresentation& p, std::uint64_t seed, Options options)
    : p_(&p), options_(options), rng_(seed), class_of_(class_index(p)) {}

BigInt ElementSampler::integer(std::int64_t lo, std::int64_t hi) {
  return BigInt(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_));
}

Rational ElementSampler::rational(std::int64_t radius) {
  auto den = std::uniform_int_distribution<std::int64_t>(1, options_.max_denominator)(rng_);
  auto num = std::uniform_int_distribution<std::int64_t>(-radius * den, radius * den)(rng_);
  return Rational(BigInt(num), BigInt(den));
}

GroupElement ElementSampler::group_element() {
  const auto r = options_.radius;
  std::vector<BigInt> class_lead(p_->linkage.size());
  for (auto& l : class_lead) l = integer(-r, r);
  GroupElement g;
  for (std::size_t b = 0; b < p_->blocks.size(); ++b) {
    const auto& kind = p_->blocks[b];
    switch (kind.type) {
      case ChainType::zlex: {
        LexVector v(kind.depth);
        v[0] = class_lead[class_of_[b]];
        for (std::size_t i = 1; i < kind.depth; ++i) v[i] = integer(-r, r);
        g.blocks.emplace_back(std::move(v));
        break;
      }
      case ChainType::rational:
        g.blocks.emplace_back(rational(r));
        break;
      case ChainType::ncmatrix: {
        auto den = std::uniform_int_distribution<std::int64_t>(1, options_.max_denominator)(rng_);
        auto num = std::uniform_int_distribution<std::int64_t>(1, r)(rng_);
        g.blocks.emplace_back(Affine{Rational(BigInt(num), BigInt(den)), rational(r)});
        break;
      }
    }
  }
  return g;
}

GroupElement ElementSampler::positive_element() { return absolute(p_->blocks, group_element()); }

GroupElement ElementSampler::carrier_element() {
  auto x = group_meet(p_->blocks, positive_element(), p_->unit);
  if (std::uniform_int_distribution<int>(0, 1)(rng_) == 1) x = group_sub(p_->blocks, p_->unit, x);
  return x;
}

GroupElement ElementSampler::nonzero_carrier_element() {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto x = carrier_element();
    if (!group_is_identity(p_->blocks, x)) return x;
  }
  return p_->unit;
}

}  // namespace pmvlab
