#include "pmvlab/ortho.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pmvlab {

namespace {

ChainValue convert(const ChainKind& from, const ChainKind& to, const ChainValue& v) {
  if (from == to) return v;
  // zlex¹ into q
  return Rational(std::get<LexVector>(v).front());
}

std::optional<ChainValue> convert_back(const ChainKind& from, const ChainKind& to, const ChainValue& v) {
  if (from == to) return v;
  const auto& r = std::get<Rational>(v);
  if (!is_integral(r)) return std::nullopt;
  return ChainValue(LexVector{numerator(r)});
}

bool compatible(const ChainKind& from, const ChainKind& to) {
  return from == to || (from.type == ChainType::zlex && from.depth == 1 && to.type == ChainType::rational);
}

GroupElement gamma_multiple(const SubdirectPresentation& p, std::size_t n, const GroupElement& y) {
  return group_meet(p.blocks, group_multiple(p.blocks, n, y), p.unit);
}

std::vector<CarrierSet> lift(const FiniteSubalgebra& sub, std::size_t parent_size, const std::vector<CarrierSet>& sets) {
  std::vector<CarrierSet> out;
  for (const auto& s : sets) {
    CarrierSet t(parent_size);
    for (auto i : members(s)) t.set(sub.to_parent[i]);
    out.push_back(std::move(t));
  }
  return out;
}

/// Polars of a subalgebra, as parent carrier sets.
std::vector<CarrierSet> sub_polars(const FinitePMV& b, const CarrierSet& a) {
  const auto sub = induced_subalgebra(b, a);
  return lift(sub, b.size(), polar_lattice(sub.algebra).polars);
}

/// Least element of `within` above every member of s, if one exists.
std::optional<Index> least_upper_bound(const FinitePMV& m, const CarrierSet& within, const std::vector<Index>& s) {
  std::vector<Index> bounds;
  for (auto v : members(within)) {
    bool upper = true;
    for (auto x : s)
      if (!m.leq(x, v)) upper = false;
    if (upper) bounds.push_back(v);
  }
  for (auto v : bounds) {
    bool least = true;
    for (auto w : bounds)
      if (!m.leq(v, w)) least = false;
    if (least) return v;
  }
  return std::nullopt;
}

[[noreturn]] void correspondence_failure(const std::string& what) {
  throw Error(ErrorCode::correspondence_failure, what);
}

void require_large(const LargenessCertificate& cert) {
  if (cert.verdict != Verdict::large)
    throw Error(ErrorCode::not_large, cert.failure.empty() ? std::string(to_string(cert.verdict)) : cert.failure);
}

/// Super blocks that carry some block of sub class `cls`.
BlockSet image_of_blocks(const Inclusion& inc, const BlockSet& sub_set) {
  BlockSet out(inc.super.blocks.size());
  for (std::size_t b = 0; b < inc.source.size(); ++b)
    if (sub_set.test(inc.source[b])) out.set(b);
  return out;
}

BlockSet preimage_of_blocks(const Inclusion& inc, const BlockSet& super_set) {
  BlockSet out(inc.sub.blocks.size());
  out.set();
  for (auto s : inc.source) out.reset(s);  // dropped blocks
  for (std::size_t b = 0; b < inc.source.size(); ++b)
    if (super_set.test(b)) out.set(inc.source[b]);
  return out;
}

}  // namespace

GroupElement Inclusion::image(const GroupElement& x) const {
  check_shape(sub.blocks, x);
  GroupElement y;
  y.blocks.reserve(source.size());
  for (std::size_t b = 0; b < source.size(); ++b)
    y.blocks.push_back(convert(sub.blocks[source[b]], super.blocks[b], x.blocks[source[b]]));
  return y;
}

std::optional<GroupElement> Inclusion::preimage(const GroupElement& y) const {
  if (!in_group(super, y)) return std::nullopt;
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> carried(sub.blocks.size(), none);
  for (std::size_t b = 0; b < source.size(); ++b) carried[source[b]] = b;
  const auto cls = class_index(sub);
  GroupElement x;
  x.blocks.resize(sub.blocks.size());
  for (std::size_t s = 0; s < sub.blocks.size(); ++s) {
    if (carried[s] != none) {
      auto v = convert_back(sub.blocks[s], super.blocks[carried[s]], y.blocks[carried[s]]);
      if (!v) return std::nullopt;
      x.blocks[s] = std::move(*v);
      continue;
    }
    for (auto t : sub.linkage[cls[s]])
      if (carried[t] != none) {
        const auto lead = chain::leading(super.blocks[carried[t]], y.blocks[carried[t]]);
        if (!is_integral(lead)) return std::nullopt;
        x.blocks[s] = LexVector{numerator(lead)};
        break;
      }
  }
  if (!in_group(sub, x) || !(image(x) == y)) return std::nullopt;
  return x;
}

std::string Inclusion::kind() const {
  if (source.size() < sub.blocks.size()) return "coordinate-projection";
  for (std::size_t b = 0; b < source.size(); ++b)
    if (source[b] != b || !(sub.blocks[b] == super.blocks[b])) return "coordinate-embedding";
  return "coordinate-identity";
}

Inclusion make_inclusion(SubdirectPresentation sub, SubdirectPresentation super, std::vector<std::size_t> source) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::precondition_failed, "inclusion: " + what); };
  require_valid(sub);
  require_valid(super);
  if (source.size() != super.blocks.size()) fail("one source block per target block");
  std::vector<bool> used(sub.blocks.size(), false);
  for (std::size_t b = 0; b < source.size(); ++b) {
    if (source[b] >= sub.blocks.size() || used[source[b]]) fail("source blocks must be distinct and in range");
    used[source[b]] = true;
    if (!compatible(sub.blocks[source[b]], super.blocks[b])) fail("incompatible chain kinds");
  }
  const auto cls = class_index(sub);
  for (std::size_t s = 0; s < sub.blocks.size(); ++s) {
    if (used[s]) continue;
    if (!(sub.blocks[s] == ChainKind::zlex(1))) fail("only zlex¹ blocks may be dropped");
    bool recoverable = false;
    for (auto t : sub.linkage[cls[s]]) recoverable = recoverable || used[t];
    if (!recoverable) fail("dropped block has no carried block in its class");
  }
  for (const auto& c : super.linkage)
    for (auto b : c)
      if (cls[source[b]] != cls[source[c.front()]]) fail("target class spans several source classes");
  Inclusion inc{std::move(sub), std::move(super), std::move(source)};
  if (!(inc.image(inc.sub.unit) == inc.super.unit)) fail("units do not correspond");
  return inc;
}

Inclusion identity_inclusion(const SubdirectPresentation& p) {
  std::vector<std::size_t> source(p.blocks.size());
  for (std::size_t b = 0; b < source.size(); ++b) source[b] = b;
  return make_inclusion(p, p, std::move(source));
}

OrthoResult orthocomplete_group(const SubdirectPresentation& p) {
  require_valid(p);
  if (p.blocks.size() > kMaxIndexBlocks) throw Error(ErrorCode::not_finite_index, "index set too large");
  const auto atoms = polar_atoms(p);
  BlockSet kept(p.blocks.size());
  for (const auto& t : atoms) kept |= t;

  std::vector<std::size_t> source = members(kept);
  std::vector<std::size_t> renumber(p.blocks.size(), 0);
  SubdirectPresentation out;
  for (std::size_t i = 0; i < source.size(); ++i) {
    renumber[source[i]] = i;
    out.blocks.push_back(p.blocks[source[i]]);
    out.unit.blocks.push_back(p.unit.blocks[source[i]]);
  }
  for (const auto& c : p.linkage)
    for (const auto& t : atoms) {
      std::vector<std::size_t> part;
      for (auto b : c)
        if (t.test(b)) part.push_back(renumber[b]);
      if (!part.empty()) out.linkage.push_back(std::move(part));
    }
  out.linkage = normalize_linkage(std::move(out.linkage));
  auto embedding = make_inclusion(p, out, std::move(source));
  return {std::move(out), std::move(embedding)};
}

FiniteOrtho orthocompletion(const FinitePMV& m) {
  std::vector<Index> id(m.size());
  for (Index i = 0; i < m.size(); ++i) id[i] = i;
  return {&m, std::move(id)};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::large: return "large";
    case Verdict::not_large: return "not-large";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

LargenessCertificate is_large(const FinitePMV& b, const CarrierSet& a, std::size_t n_bound) {
  if (!is_subalgebra(b, a)) throw Error(ErrorCode::precondition_failed, to_string(a) + " is not a subalgebra");
  LargenessCertificate cert;
  for (Index y = 0; y < b.size(); ++y) {
    if (y == b.zero()) continue;
    bool found = false;
    bool saturated = false;
    Index z = b.zero();
    for (std::size_t n = 1; n <= n_bound && !found && !saturated; ++n) {
      const auto next = b.oplus(z, y);
      saturated = next == z;
      z = next;
      if (a.test(y)) {
        cert.entries.push_back({std::to_string(y), n, std::to_string(y)});
        found = true;
        break;
      }
      for (auto x : members(a))
        if (x != b.zero() && b.leq(x, z)) {
          cert.entries.push_back({std::to_string(y), n, std::to_string(x)});
          found = true;
          break;
        }
    }
    if (!found) {
      cert.verdict = saturated ? Verdict::not_large : Verdict::inconclusive;
      cert.failure = "no witness below n.y for y=" + std::to_string(y);
      return cert;
    }
  }
  return cert;
}

std::optional<LargeWitness> find_large_witness(const Inclusion& inc, const GroupElement& y, std::size_t n_bound) {
  const auto& sp = inc.super;
  const auto zero = group_identity(sp.blocks);
  if (!in_interval(sp, y) || y == zero) throw Error(ErrorCode::precondition_failed, "y must be a nonzero carrier element");
  auto valid = [&](const GroupElement& x, const GroupElement& z) {
    return !(x == zero) && in_interval(sp, x) && group_leq(sp.blocks, x, z) && inc.contains(x);
  };
  const auto sub_cls = class_index(inc.sub);
  for (std::size_t n = 1; n <= n_bound; ++n) {
    const auto z = gamma_multiple(sp, n, y);
    if (valid(y, z)) return LargeWitness{n, y};
    for (std::size_t b = 0; b < sp.blocks.size(); ++b) {
      if (!sp.blocks[b].has_tail() || chain::compare(sp.blocks[b], z.blocks[b], chain::identity(sp.blocks[b])) <= 0)
        continue;
      auto x = zero;
      LexVector tail(sp.blocks[b].depth, BigInt(0));
      tail.back() = 1;
      x.blocks[b] = tail;
      if (valid(x, z)) return LargeWitness{n, x};
    }
    for (const auto& c : inc.sub.linkage) {
      auto x = zero;
      for (std::size_t b = 0; b < sp.blocks.size(); ++b) {
        if (sub_cls[inc.source[b]] != sub_cls[c.front()]) continue;
        const auto& kind = sp.blocks[b];
        if (kind.type == ChainType::zlex) {
          LexVector e(kind.depth, BigInt(0));
          e.front() = 1;
          x.blocks[b] = e;
        } else if (kind.type == ChainType::rational) {
          x.blocks[b] = Rational(1);
        } else {
          x.blocks[b] = z.blocks[b];
        }
      }
      x = group_meet(sp.blocks, x, sp.unit);
      if (valid(x, z)) return LargeWitness{n, x};
    }
    for (std::size_t b = 0; b < sp.blocks.size(); ++b) {
      BlockSet only(sp.blocks.size());
      only.set(b);
      auto x = restrict_to(sp, z, only);
      if (valid(x, z)) return LargeWitness{n, x};
    }
  }
  return std::nullopt;
}

LargenessCertificate is_large(const Inclusion& inc, const SampleOptions& options, std::size_t n_bound) {
  LargenessCertificate cert;
  std::vector<GroupElement> probes;
  for (const auto& s : achievable_supports(inc.super))
    if (s.any()) probes.push_back(support_element(inc.super, s));
  ElementSampler sampler(inc.super, options.seed, {options.radius, options.max_denominator});
  for (std::size_t i = 0; i < options.samples; ++i) probes.push_back(sampler.nonzero_carrier_element());
  for (const auto& y : probes) {
    if (group_is_identity(inc.super.blocks, y)) continue;
    auto w = find_large_witness(inc, y, n_bound);
    if (!w) {
      cert.verdict = Verdict::inconclusive;
      cert.failure = "bound exhausted for y=" + render(y);
      return cert;
    }
    cert.entries.push_back({render(y), w->n, render(w->x)});
  }
  return cert;
}

OrthocompleteReport is_orthocomplete(const FinitePMV& m, std::size_t max_family) {
  OrthocompleteReport r;
  const auto proj = classify_projectability(m);
  r.strongly_projectable = proj.strongly_projectable;
  if (!r.strongly_projectable) {
    r.detail = "not strongly projectable: " + proj.witness;
    return r;
  }
  const auto all = full_set(m.size());
  std::vector<Index> family;
  bool ok = true;
  std::function<void(Index)> extend = [&](Index from) {
    if (!family.empty()) {
      ++r.families;
      if (!least_upper_bound(m, all, family)) {
        ok = false;
        r.detail = "family without lub";
      }
    }
    if (family.size() == max_family || !ok) return;
    for (Index x = from; x < m.size(); ++x) {
      if (x == m.zero()) continue;
      bool disjoint = true;
      for (auto f : family)
        if (m.meet(f, x) != m.zero()) disjoint = false;
      if (!disjoint) continue;
      family.push_back(x);
      extend(x + 1);
      family.pop_back();
    }
  };
  extend(0);
  r.orthocomplete = ok;
  if (ok) r.detail = "every disjoint family has a lub";
  return r;
}

OrthocompleteReport is_orthocomplete(const SubdirectPresentation& p, const SampleOptions& options,
                                     std::size_t max_family) {
  OrthocompleteReport r;
  const auto proj = classify_projectability(p);
  r.strongly_projectable = proj.strongly_projectable;
  if (!r.strongly_projectable) {
    r.detail = "not strongly projectable: " + proj.witness;
    return r;
  }
  const auto atoms = polar_atoms(p);
  ElementSampler sampler(p, options.seed, {options.radius, options.max_denominator});
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<GroupElement> family;
    for (const auto& t : atoms) {
      if (family.size() == max_family) break;
      if (!coin(sampler.engine())) continue;
      auto x = restrict_to(p, sampler.nonzero_carrier_element(), t);
      if (group_is_identity(p.blocks, x)) continue;
      if (!in_interval(p, x)) {
        r.detail = "per-atom restriction left the carrier: " + render(x);
        return r;
      }
      family.push_back(std::move(x));
    }
    if (family.empty()) continue;
    ++r.families;
    auto lub = family.front();
    for (const auto& x : family) lub = group_join(p.blocks, lub, x);
    if (!in_interval(p, lub)) {
      r.detail = "join of a disjoint family left the carrier: " + render(lub);
      return r;
    }
  }
  r.orthocomplete = true;
  r.detail = "every sampled disjoint family has a lub";
  return r;
}

LubReport lub_preservation_check(const FinitePMV& b, const CarrierSet& a, std::size_t max_set) {
  require_large(is_large(b, a));
  LubReport report;
  const auto elems = members(a);
  const auto all = full_set(b.size());
  std::vector<Index> s;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (!s.empty()) {
      const auto in_a = least_upper_bound(b, a, s);
      if (in_a) {
        ++report.checked;
        const auto in_b = least_upper_bound(b, all, s);
        if (in_b != in_a) {
          std::string w = "{";
          for (auto x : s) w += std::to_string(x) + ",";
          w.back() = '}';
          report.violations.push_back(w);
        }
      }
    }
    if (s.size() == max_set) return;
    for (std::size_t i = from; i < elems.size(); ++i) {
      s.push_back(elems[i]);
      extend(i + 1);
      s.pop_back();
    }
  };
  extend(0);
  return report;
}

LubReport lub_preservation_check(const Inclusion& inc, std::size_t max_set, const SampleOptions& options) {
  require_large(is_large(inc, options));
  LubReport report;
  ElementSampler sampler(inc.sub, options.seed ^ 0x9e3779b97f4a7c15ull, {options.radius, options.max_denominator});
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(max_set, 1));
  for (std::size_t i = 0; i < options.samples; ++i) {
    const auto k = size(sampler.engine());
    std::vector<GroupElement> s;
    for (std::size_t j = 0; j < k; ++j) s.push_back(sampler.carrier_element());
    auto lub_a = s.front();
    auto lub_b = inc.image(s.front());
    for (const auto& x : s) {
      lub_a = group_join(inc.sub.blocks, lub_a, x);
      lub_b = group_join(inc.super.blocks, lub_b, inc.image(x));
    }
    ++report.checked;
    bool ok = inc.image(lub_a) == lub_b && in_interval(inc.super, lub_b) && inc.contains(lub_b);
    for (const auto& x : s) ok = ok && group_leq(inc.super.blocks, inc.image(x), lub_b);
    if (!ok) report.violations.push_back("lub of " + std::to_string(k) + " elements: " + render(lub_b));
  }
  return report;
}

PolarCorrespondence polar_correspondence(const FinitePMV& b, const CarrierSet& a) {
  require_large(is_large(b, a));
  const auto rho_a = sub_polars(b, a);
  const auto rho_b = polar_lattice(b).polars;
  auto polar_a = [&](const CarrierSet& x) { return polar(b, x) & a; };
  auto phi = [&](const CarrierSet& i) { return i & a; };
  auto psi = [&](const CarrierSet& j) { return polar(b, polar_a(j)); };
  auto find = [](const std::vector<CarrierSet>& v, const CarrierSet& s) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin());
  };

  PolarCorrespondence out{rho_a.size(), rho_b.size(), false, {}};
  for (const auto& i : rho_b) {
    const auto k = find(rho_a, phi(i));
    if (k == rho_a.size()) correspondence_failure("Φ" + to_string(i) + " is not a polar of the subalgebra");
    if (psi(rho_a[k]) != i) correspondence_failure("Ψ∘Φ moves " + to_string(i));
    out.phi.push_back(k);
  }
  for (const auto& j : rho_a) {
    if (find(rho_b, psi(j)) == rho_b.size()) correspondence_failure("Ψ" + to_string(j) + " is not a polar");
    if (phi(psi(j)) != j) correspondence_failure("Φ∘Ψ moves " + to_string(j));
  }
  for (std::size_t x = 0; x < rho_b.size(); ++x)
    for (std::size_t y = 0; y < rho_b.size(); ++y)
      if (rho_b[x].is_subset_of(rho_b[y]) != rho_a[out.phi[x]].is_subset_of(rho_a[out.phi[y]]))
        correspondence_failure("Φ is not an order isomorphism");

  const auto sub = induced_subalgebra(b, a);
  if (classify_projectability(b).strongly_projectable && classify_projectability(sub.algebra).strongly_projectable) {
    out.shared_witness_checked = true;
    for (const auto& j : rho_a) {
      std::optional<Index> w;
      for (auto x : members(j))
        if ((b.down_set(x) & a) == j) w = x;
      if (!w || !is_boolean(b, *w) || psi(j) != b.down_set(*w))
        correspondence_failure("no shared Boolean witness for " + to_string(j));
    }
  }
  return out;
}

PolarCorrespondence polar_correspondence(const Inclusion& inc) {
  require_large(is_large(inc));
  const auto rho_a = polar_supports(inc.sub);
  const auto rho_b = polar_supports(inc.super);
  auto phi = [&](const BlockSet& t) { return interior(inc.sub, preimage_of_blocks(inc, t)); };
  auto psi = [&](const BlockSet& s) {
    return polar_complement(inc.super, image_of_blocks(inc, polar_complement(inc.sub, s)));
  };
  auto find = [](const std::vector<BlockSet>& v, const BlockSet& s) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin());
  };

  PolarCorrespondence out{rho_a.size(), rho_b.size(), false, {}};
  for (const auto& t : rho_b) {
    const auto k = find(rho_a, phi(t));
    if (k == rho_a.size()) correspondence_failure("Φ" + to_string(t) + " is not a polar support");
    if (psi(rho_a[k]) != t) correspondence_failure("Ψ∘Φ moves " + to_string(t));
    out.phi.push_back(k);
  }
  for (const auto& s : rho_a) {
    if (find(rho_b, psi(s)) == rho_b.size()) correspondence_failure("Ψ" + to_string(s) + " is not a polar support");
    if (phi(psi(s)) != s) correspondence_failure("Φ∘Ψ moves " + to_string(s));
  }
  for (std::size_t x = 0; x < rho_b.size(); ++x)
    for (std::size_t y = 0; y < rho_b.size(); ++y)
      if (rho_b[x].is_subset_of(rho_b[y]) != rho_a[out.phi[x]].is_subset_of(rho_a[out.phi[y]]))
        correspondence_failure("Φ is not an order isomorphism");

  if (classify_projectability(inc.sub).strongly_projectable && classify_projectability(inc.super).strongly_projectable) {
    out.shared_witness_checked = true;
    const GammaAlgebra super(inc.super);
    for (const auto& s : rho_a) {
      const auto w = inc.image(restrict_to(inc.sub, inc.sub.unit, s));
      if (!is_boolean(super, w) || support(inc.super, w) != psi(s))
        correspondence_failure("no shared Boolean witness for " + to_string(s));
    }
  }
  return out;
}

FiniteExtension minimal_projectable_extension(const FinitePMV& b, const CarrierSet& a) {
  if (!is_subalgebra(b, a)) throw Error(ErrorCode::precondition_failed, to_string(a) + " is not a subalgebra");
  if (!classify_projectability(b).strongly_projectable)
    throw Error(ErrorCode::precondition_failed, "ambient algebra is not strongly projectable");
  FiniteExtension ext;
  CarrierSet d = a;
  for (;;) {
    if (++ext.iterations > kExtensionIterationCap) throw Error(ErrorCode::non_termination, "iteration cap reached");
    CarrierSet gens = d;
    for (const auto& j : sub_polars(b, d)) {
      const auto k = polar(b, polar(b, j) & d);
      const auto w = summand_witness(b, k);
      if (!w) throw Error(ErrorCode::internal_inconsistency, "polar without Boolean witness in a strongly projectable algebra");
      gens.set(*w);
    }
    auto next = generated_subalgebra(b, gens);
    if (next == d) break;
    d = std::move(next);
  }
  ext.carrier = d;
  ext.strongly_projectable = classify_projectability(induced_subalgebra(b, d).algebra).strongly_projectable;
  ext.minimal = true;
  for (const auto& s : enumerate_subalgebras(b, std::max(b.size(), kDefaultIdealCap)))
    if (a.is_subset_of(s) && s.is_subset_of(d) && s != d &&
        classify_projectability(induced_subalgebra(b, s).algebra).strongly_projectable)
      ext.minimal = false;
  return ext;
}

SymbolicExtension minimal_projectable_extension(const SubdirectPresentation& p) {
  SymbolicExtension ext;
  ext.ortho = orthocomplete_group(p);
  const auto& o = ext.ortho.completed;
  const auto& inc = ext.ortho.embedding;

  std::vector<std::size_t> renumber(p.blocks.size(), static_cast<std::size_t>(-1));
  for (std::size_t b = 0; b < inc.source.size(); ++b) renumber[inc.source[b]] = b;
  SubdirectPresentation d{o.blocks, {}, o.unit};
  for (const auto& c : p.linkage) {
    std::vector<std::size_t> part;
    for (auto b : c)
      if (renumber[b] != static_cast<std::size_t>(-1)) part.push_back(renumber[b]);
    if (!part.empty()) d.linkage.push_back(std::move(part));
  }
  d.linkage = normalize_linkage(std::move(d.linkage));

  for (;;) {
    if (++ext.iterations > kExtensionIterationCap) throw Error(ErrorCode::non_termination, "iteration cap reached");
    Linkage next = d.linkage;
    for (const auto& t : polar_supports(d)) {
      const auto k = polar_complement(o, polar_complement(d, t));
      if (!is_union_of_classes(o, k))
        throw Error(ErrorCode::internal_inconsistency, "completion polar is not a Boolean support");
      Linkage split;
      for (const auto& c : next) {
        std::vector<std::size_t> in, out;
        for (auto b : c) (k.test(b) ? in : out).push_back(b);
        if (!in.empty()) split.push_back(std::move(in));
        if (!out.empty()) split.push_back(std::move(out));
      }
      next = std::move(split);
    }
    next = normalize_linkage(std::move(next));
    if (next == d.linkage) break;
    d.linkage = std::move(next);
  }

  auto coarser = [](const SubdirectPresentation& fine, const SubdirectPresentation& coarse) {
    const auto cls = class_index(coarse);
    for (const auto& c : fine.linkage)
      for (auto b : c)
        if (cls[b] != cls[c.front()]) return false;
    return true;
  };
  SubdirectPresentation a_image{o.blocks, {}, o.unit};
  for (const auto& c : p.linkage) {
    std::vector<std::size_t> part;
    for (auto b : c)
      if (renumber[b] != static_cast<std::size_t>(-1)) part.push_back(renumber[b]);
    if (!part.empty()) a_image.linkage.push_back(std::move(part));
  }
  ext.contains_source = coarser(d, a_image);
  ext.within_orthocompletion = coarser(o, d);
  ext.strongly_projectable = classify_projectability(d).strongly_projectable;
  ext.extension = std::move(d);
  return ext;
}

std::optional<std::size_t> strong_unit_multiple(const SubdirectPresentation& p, const GroupElement& x,
                                                std::size_t n_bound) {
  auto nu = p.unit;
  for (std::size_t n = 1; n <= n_bound; ++n) {
    if (group_leq(p.blocks, x, nu)) return n;
    nu = group_add(p.blocks, nu, p.unit);
  }
  return std::nullopt;
}

StrongUnitReport strong_unit_check(const OrthoResult& o, std::size_t n_bound, const SampleOptions& options) {
  StrongUnitReport r;
  const auto& p = o.completed;
  ElementSampler sampler(p, options.seed, {options.radius, options.max_denominator});
  std::vector<GroupElement> xs{p.unit};
  for (std::size_t i = 0; i < options.samples; ++i) xs.push_back(sampler.group_element());
  for (const auto& x : xs) {
    ++r.checked;
    if (auto n = strong_unit_multiple(p, x, n_bound))
      r.max_n = std::max(r.max_n, *n);
    else
      ++r.exhausted;
  }
  r.verdict = r.exhausted == 0 ? Verdict::large : Verdict::inconclusive;
  return r;
}

RepresentabilityReport is_representable(const SubdirectPresentation& p, const SampleOptions& options) {
  const GammaAlgebra ga(p);
  ElementSampler sampler(p, options.seed, {options.radius, options.max_denominator});
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto a = sampler.carrier_element();
    const auto t = polar_complement(p, support(p, a));
    auto i = restrict_to(p, sampler.carrier_element(), t);
    if (!in_interval(p, i)) i = t.any() ? support_element(p, t) : ga.zero();
    const auto y = sampler.carrier_element();
    const auto j = ga.odot(ga.oplus(y, i), ga.neg_minus(y));
    const auto j2 = ga.odot(ga.neg_tilde(y), ga.oplus(i, y));
    if (!support(p, j).is_subset_of(t) || !support(p, j2).is_subset_of(t))
      return {false, std::nullopt, "polar of " + render(a) + " is not normal"};
  }
  return {true, std::nullopt, "sampled polars are normal"};
}

}  // namespace pmvlab
