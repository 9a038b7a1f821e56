#include "pmvlab/support.hpp"

#include <algorithm>

namespace pmvlab {

namespace {

BlockSet class_set(const SubdirectPresentation& p, const std::vector<std::size_t>& cls) {
  BlockSet s(p.blocks.size());
  for (auto b : cls) s.set(b);
  return s;
}

BlockSet deep_blocks(const SubdirectPresentation& p, const std::vector<std::size_t>& cls) {
  BlockSet s(p.blocks.size());
  for (auto b : cls)
    if (p.blocks[b].has_tail()) s.set(b);
  return s;
}

void require_enumerable(const SubdirectPresentation& p) {
  if (p.blocks.size() > kMaxEnumeratedBlocks)
    throw Error(ErrorCode::not_enumerable, "too many blocks to enumerate subsets");
}

std::vector<BlockSet> sorted(std::vector<BlockSet> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

BlockSet support(const SubdirectPresentation& p, const GroupElement& x) {
  if (!in_group(p, x)) throw Error(ErrorCode::not_in_group, render(x) + " is not in G");
  BlockSet s(p.blocks.size());
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    if (!chain::is_identity(p.blocks[b], x.blocks[b])) s.set(b);
  return s;
}

bool is_achievable(const SubdirectPresentation& p, const BlockSet& s) {
  return interior(p, s) == s;
}

BlockSet interior(const SubdirectPresentation& p, const BlockSet& s) {
  BlockSet out(p.blocks.size());
  for (const auto& cls : p.linkage) {
    const auto c = class_set(p, cls);
    out |= c.is_subset_of(s) ? c : (s & deep_blocks(p, cls));
  }
  return out;
}

BlockSet polar_complement(const SubdirectPresentation& p, const BlockSet& t) {
  return interior(p, ~t);
}

bool is_polar_support(const SubdirectPresentation& p, const BlockSet& t) {
  return polar_complement(p, polar_complement(p, t)) == t;
}

std::vector<BlockSet> achievable_supports(const SubdirectPresentation& p) {
  require_enumerable(p);
  const auto n = p.blocks.size();
  std::vector<BlockSet> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    BlockSet s(n, mask);
    if (is_achievable(p, s)) out.push_back(std::move(s));
  }
  return sorted(std::move(out));
}

std::vector<BlockSet> polar_supports(const SubdirectPresentation& p) {
  const auto n = p.blocks.size();
  std::vector<BlockSet> acc{BlockSet(n)};
  for (const auto& cls : p.linkage) {
    const auto c = class_set(p, cls);
    const auto d = deep_blocks(p, cls);
    const bool shallow = d != c;
    // Options for this class.
    std::vector<BlockSet> options;
    const auto members_c = members(c);
    if (members_c.size() > kMaxEnumeratedBlocks) throw Error(ErrorCode::not_enumerable, "class too large");
    if (!shallow) {
      for (unsigned long mask = 0; mask < (1ul << members_c.size()); ++mask) {
        BlockSet s(n);
        for (std::size_t i = 0; i < members_c.size(); ++i)
          if (mask >> i & 1ul) s.set(members_c[i]);
        options.push_back(std::move(s));
      }
    } else {
      options.push_back(BlockSet(n));
      options.push_back(c);
      const auto members_d = members(d);
      if (members_d.size() >= 2)
        for (unsigned long mask = 1; mask + 1 < (1ul << members_d.size()); ++mask) {
          BlockSet s(n);
          for (std::size_t i = 0; i < members_d.size(); ++i)
            if (mask >> i & 1ul) s.set(members_d[i]);
          options.push_back(std::move(s));
        }
    }
    if (acc.size() * options.size() > (std::size_t{1} << kMaxEnumeratedBlocks))
      throw Error(ErrorCode::not_enumerable, "too many polar supports");
    std::vector<BlockSet> next;
    next.reserve(acc.size() * options.size());
    for (const auto& a : acc)
      for (const auto& o : options) next.push_back(a | o);
    acc = std::move(next);
  }
  return sorted(std::move(acc));
}

std::vector<BlockSet> polar_supports_by_definition(const SubdirectPresentation& p) {
  std::vector<BlockSet> out;
  for (const auto& t : achievable_supports(p)) out.push_back(polar_complement(p, t));
  return sorted(std::move(out));
}

std::vector<BlockSet> polar_atoms(const SubdirectPresentation& p) {
  const auto all = polar_supports(p);
  std::vector<BlockSet> atoms;
  for (const auto& t : all) {
    if (t.none()) continue;
    bool minimal = true;
    for (const auto& s : all)
      if (s.any() && s != t && s.is_subset_of(t)) minimal = false;
    if (minimal) atoms.push_back(t);
  }
  return sorted(std::move(atoms));
}

SupportLattice support_lattice(const SubdirectPresentation& p) {
  require_valid(p);
  return {p.blocks.size(), achievable_supports(p), polar_supports(p), polar_atoms(p)};
}

GroupElement support_element(const SubdirectPresentation& p, const BlockSet& s) {
  if (!is_achievable(p, s)) throw Error(ErrorCode::precondition_failed, to_string(s) + " is not an achievable support");
  const auto cls_of = class_index(p);
  GroupElement x = group_identity(p.blocks);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (!s.test(b)) continue;
    const auto& kind = p.blocks[b];
    const bool whole = class_set(p, p.linkage[cls_of[b]]).is_subset_of(s);
    switch (kind.type) {
      case ChainType::zlex: {
        LexVector v(kind.depth, BigInt(0));
        if (whole)
          v.front() = 1;
        else
          v.back() = 1;
        x.blocks[b] = v;
        break;
      }
      case ChainType::rational: x.blocks[b] = Rational(1); break;
      case ChainType::ncmatrix: x.blocks[b] = Affine{Rational(2), Rational(0)}; break;
    }
  }
  return group_meet(p.blocks, x, p.unit);
}

GroupElement restrict_to(const SubdirectPresentation& p, const GroupElement& x, const BlockSet& s) {
  GroupElement out = x;
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    if (!s.test(b)) out.blocks[b] = chain::identity(p.blocks[b]);
  return out;
}

bool is_union_of_classes(const SubdirectPresentation& p, const BlockSet& s) {
  for (const auto& cls : p.linkage) {
    const auto c = class_set(p, cls);
    if ((c & s).any() && !c.is_subset_of(s)) return false;
  }
  return true;
}

}  // namespace pmvlab
