#include "pmvlab/gamma.hpp"

#include <numeric>

#include "pmvlab/parallel.hpp"

namespace pmvlab {

GammaAlgebra::GammaAlgebra(SubdirectPresentation p) : p_(std::move(p)) {
  require_valid(p_);
  zero_ = group_identity(p_.blocks);
}

GroupElement GammaAlgebra::oplus(const GroupElement& x, const GroupElement& y) const {
  return group_meet(blocks(), group_add(blocks(), x, y), p_.unit);
}

GroupElement GammaAlgebra::neg_minus(const GroupElement& x) const {
  return group_add(blocks(), p_.unit, group_negate(blocks(), x));
}

GroupElement GammaAlgebra::neg_tilde(const GroupElement& x) const {
  return group_add(blocks(), group_negate(blocks(), x), p_.unit);
}

GroupElement GammaAlgebra::odot(const GroupElement& x, const GroupElement& y) const {
  auto t = group_add(blocks(), group_add(blocks(), x, group_negate(blocks(), p_.unit)), y);
  return group_join(blocks(), t, zero_);
}

GroupElement gamma_eval(const GammaAlgebra& ga, GammaOp op, std::span<const GroupElement> args) {
  const bool unary = op == GammaOp::neg_minus || op == GammaOp::neg_tilde;
  if (args.size() != (unary ? 1u : 2u)) throw Error(ErrorCode::precondition_failed, "wrong number of arguments");
  for (const auto& a : args)
    if (!ga.contains(a)) throw Error(ErrorCode::not_in_carrier, render(a) + " is not in [0,u]");
  switch (op) {
    case GammaOp::oplus: return ga.oplus(args[0], args[1]);
    case GammaOp::odot: return ga.odot(args[0], args[1]);
    case GammaOp::neg_minus: return ga.neg_minus(args[0]);
    case GammaOp::neg_tilde: return ga.neg_tilde(args[0]);
    case GammaOp::join: return ga.join(args[0], args[1]);
    case GammaOp::meet: return ga.meet(args[0], args[1]);
  }
  throw Error(ErrorCode::precondition_failed, "unknown operation");
}

AxiomReport check_axioms_sampled(const GammaAlgebra& ga, std::size_t samples, std::uint64_t seed,
                                 AxiomOptions options) {
  // Draw every triple up front so results do not depend on worker scheduling.
  ElementSampler sampler(ga.presentation(), seed);
  std::vector<std::array<GroupElement, 3>> triples;
  triples.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s)
    triples.push_back({sampler.carrier_element(), sampler.carrier_element(), sampler.carrier_element()});

  std::vector<std::vector<AxiomViolation>> parts(worker_count());
  auto chunks = parallel_chunks(samples, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      if (options.first_only && !parts[w].empty()) return;
      const auto& [x, y, z] = triples[s];
      auto record = [&](std::string_view label) {
        parts[w].push_back({std::string(label), {s}, {render(x), render(y), render(z)}});
      };
      check_axiom_instance(ga, x, y, z, record);
      if (!(formula::join(ga, x, y) == ga.join(x, y))) record("join-lub");
      if (!(formula::meet(ga, x, y) == ga.meet(x, y))) record("meet-glb");
      if (formula::leq(ga, x, y) != ga.leq(x, y)) record("order-bounds");
      if (!(ga.meet(x, ga.join(y, z)) == ga.join(ga.meet(x, y), ga.meet(x, z)))) record("distributive");
    }
  });
  AxiomReport report;
  report.instances = samples;
  for (std::size_t w = 0; w < chunks; ++w)
    for (auto& v : parts[w]) report.violations.push_back(std::move(v));
  if (options.first_only && report.violations.size() > 1) report.violations.resize(1);
  report.passed = report.violations.empty();
  return report;
}

Classification classify(const GammaAlgebra& ga, std::size_t samples, std::uint64_t seed) {
  ElementSampler sampler(ga.presentation(), seed);
  Classification c{true, true, true};
  for (std::size_t s = 0; s < samples && (c.commutative || c.symmetric); ++s) {
    auto x = sampler.carrier_element();
    auto y = sampler.carrier_element();
    if (!(ga.oplus(x, y) == ga.oplus(y, x))) c.commutative = false;
    if (!(ga.neg_minus(x) == ga.neg_tilde(x))) c.symmetric = false;
  }
  return c;
}

AxiomReport check_gamma_sums(const GammaAlgebra& ga, std::size_t samples, std::uint64_t seed) {
  const auto blocks = ga.blocks();
  ElementSampler sampler(ga.presentation(), seed);
  std::uniform_int_distribution<std::size_t> arity(2, 4);
  AxiomReport report;
  report.instances = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto k = arity(sampler.engine());
    std::vector<GroupElement> xs;
    for (std::size_t i = 0; i < k; ++i) xs.push_back(sampler.carrier_element());
    auto folded = xs.front();
    auto sum = xs.front();
    for (std::size_t i = 1; i < k; ++i) {
      folded = ga.oplus(folded, xs[i]);
      sum = group_add(blocks, sum, xs[i]);
    }
    if (!(folded == group_meet(blocks, sum, ga.one()))) {
      std::vector<std::string> shown;
      for (const auto& x : xs) shown.push_back(render(x));
      report.violations.push_back({"gamma-sum", {s}, std::move(shown)});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

AxiomReport check_lgroup_laws(const SubdirectPresentation& p, std::size_t samples, std::uint64_t seed) {
  const BlockList b = p.blocks;
  ElementSampler sampler(p, seed);
  AxiomReport report;
  report.instances = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = sampler.group_element();
    const auto y = sampler.group_element();
    const auto z = sampler.group_element();
    auto record = [&](std::string_view law) {
      report.violations.push_back({std::string(law), {s}, {render(x), render(y), render(z)}});
    };
    if (!(group_add(b, x, group_join(b, y, z)) == group_join(b, group_add(b, x, y), group_add(b, x, z))) ||
        !(group_add(b, group_join(b, y, z), x) == group_join(b, group_add(b, y, x), group_add(b, z, x))))
      record("l-i");
    if (!(group_negate(b, group_meet(b, x, y)) == group_join(b, group_negate(b, x), group_negate(b, y))))
      record("l-ii");
    const auto px = absolute(b, x), py = absolute(b, y), pz = absolute(b, z);
    if (!group_leq(b, group_meet(b, px, group_add(b, py, pz)),
                   group_add(b, group_meet(b, px, py), group_meet(b, px, pz))))
      record("l-iii");
    const auto ax = absolute(b, x);
    if (!group_leq(b, absolute(b, group_add(b, x, y)), group_add(b, group_add(b, ax, absolute(b, y)), ax)))
      record("wti");
    if (!in_group(p, group_add(b, x, y)) || !in_group(p, group_meet(b, x, y)) || !in_group(p, group_negate(b, x)))
      record("closure");
  }
  report.passed = report.violations.empty();
  return report;
}

Index FiniteGamma::index_of(std::span<const int> c) const {
  if (c.size() != units.size()) throw Error(ErrorCode::out_of_carrier, "coordinate count mismatch");
  Index idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] > units[i]) throw Error(ErrorCode::out_of_carrier, "coordinate outside [0,u]");
    idx = idx * static_cast<Index>(units[i] + 1) + static_cast<Index>(c[i]);
  }
  return idx;
}

FiniteGamma make_finite_gamma(std::span<const int> units, std::size_t cap) {
  if (units.empty()) throw Error(ErrorCode::precondition_failed, "need at least one chain");
  std::size_t size = 1;
  for (int u : units) {
    if (u < 1) throw Error(ErrorCode::precondition_failed, "chain units must be positive");
    size *= static_cast<std::size_t>(u + 1);
    if (size > cap) throw Error(ErrorCode::cap_exceeded, "carrier exceeds cap " + std::to_string(cap));
  }
  const std::size_t m = units.size();
  std::vector<std::vector<int>> coords(size, std::vector<int>(m));
  for (Index idx = 0; idx < size; ++idx) {
    Index rest = idx;
    for (std::size_t i = m; i-- > 0;) {
      coords[idx][i] = static_cast<int>(rest % static_cast<Index>(units[i] + 1));
      rest /= static_cast<Index>(units[i] + 1);
    }
  }
  auto encode = [&](const std::vector<int>& c) {
    Index idx = 0;
    for (std::size_t i = 0; i < m; ++i) idx = idx * static_cast<Index>(units[i] + 1) + static_cast<Index>(c[i]);
    return idx;
  };
  std::vector<std::vector<Index>> oplus(size, std::vector<Index>(size));
  std::vector<Index> neg(size);
  std::vector<int> tmp(m);
  for (Index x = 0; x < size; ++x) {
    for (std::size_t i = 0; i < m; ++i) tmp[i] = units[i] - coords[x][i];
    neg[x] = encode(tmp);
    for (Index y = 0; y < size; ++y) {
      for (std::size_t i = 0; i < m; ++i) tmp[i] = std::min(coords[x][i] + coords[y][i], units[i]);
      oplus[x][y] = encode(tmp);
    }
  }
  FinitePMV algebra(std::move(oplus), neg, neg, 0, size - 1);
  return FiniteGamma{std::vector<int>(units.begin(), units.end()), std::move(coords), std::move(algebra)};
}

SubdirectPresentation finite_gamma_presentation(std::span<const int> units) {
  SubdirectPresentation p;
  for (std::size_t i = 0; i < units.size(); ++i) {
    p.blocks.push_back(ChainKind::zlex(1));
    p.linkage.push_back({i});
    p.unit.blocks.emplace_back(LexVector{BigInt(units[i])});
  }
  return p;
}

}  // namespace pmvlab
