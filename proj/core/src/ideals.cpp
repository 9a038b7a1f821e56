#include "pmvlab/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pmvlab/gamma.hpp"

namespace pmvlab {

namespace {

CarrierSet down_closure(const FinitePMV& m, const CarrierSet& s) {
  CarrierSet out = s;
  for (auto x : members(s)) out |= m.down_set(x);
  return out;
}

void require_cap(const FinitePMV& m, std::size_t cap) {
  if (m.size() > cap) throw Error(ErrorCode::cap_exceeded, "carrier exceeds cap " + std::to_string(cap));
}

}  // namespace

bool is_ideal(const FinitePMV& m, const CarrierSet& s) {
  if (!s.test(m.zero())) return false;
  const auto elems = members(s);
  for (auto x : elems) {
    if (!m.down_set(x).is_subset_of(s)) return false;
    for (auto y : elems)
      if (!s.test(m.oplus(x, y))) return false;
  }
  return true;
}

CarrierSet ideal_closure(const FinitePMV& m, const CarrierSet& x) {
  CarrierSet s = x;
  s.set(m.zero());
  s = down_closure(m, s);
  for (bool grew = true; grew;) {
    grew = false;
    const auto elems = members(s);
    for (auto a : elems)
      for (auto b : elems) {
        auto c = m.oplus(a, b);
        if (!s.test(c)) {
          s |= m.down_set(c);
          grew = true;
        }
      }
  }
  return s;
}

bool is_normal(const FinitePMV& m, const CarrierSet& ideal) {
  const auto elems = members(ideal);
  for (Index x = 0; x < m.size(); ++x) {
    CarrierSet left(m.size()), right(m.size());
    for (auto i : elems) {
      left.set(m.oplus(x, i));
      right.set(m.oplus(i, x));
    }
    if (left != right) return false;
  }
  return true;
}

CarrierSet generated_normal_ideal(const FinitePMV& m, const CarrierSet& x) {
  // x ⊕ i = j ⊕ x with j = (x⊕i)⊙x⁻, and i ⊕ x = x ⊕ j' with j' = x∼⊙(i⊕x).
  CarrierSet s = ideal_closure(m, x);
  for (bool grew = true; grew;) {
    grew = false;
    CarrierSet add = s;
    for (auto i : members(s))
      for (Index y = 0; y < m.size(); ++y) {
        add.set(m.odot(m.oplus(y, i), m.neg_minus(y)));
        add.set(m.odot(m.neg_tilde(y), m.oplus(i, y)));
      }
    if (add != s) {
      s = ideal_closure(m, add);
      grew = true;
    }
  }
  return s;
}

CarrierSet oplus_set(const FinitePMV& m, const CarrierSet& a, const CarrierSet& b) {
  CarrierSet out(m.size());
  const auto bs = members(b);
  for (auto x : members(a))
    for (auto y : bs) out.set(m.oplus(x, y));
  return out;
}

CarrierSet sum_set(const FinitePMV& m, const CarrierSet& a, const CarrierSet& b) {
  return down_closure(m, oplus_set(m, a, b));
}

CarrierSet polar(const FinitePMV& m, const CarrierSet& x) {
  CarrierSet out = full_set(m.size());
  const auto xs = members(x);
  for (Index y = 0; y < m.size(); ++y)
    for (auto a : xs)
      if (m.meet(a, y) != m.zero()) {
        out.reset(y);
        break;
      }
  return out;
}

bool is_prime(const FinitePMV& m, const CarrierSet& ideal) {
  if (ideal.all()) return false;
  for (Index x = 0; x < m.size(); ++x) {
    if (ideal.test(x)) continue;
    for (Index y = 0; y < m.size(); ++y)
      if (!ideal.test(y) && ideal.test(m.meet(x, y))) return false;
  }
  return true;
}

bool is_prime_by_residuals(const FinitePMV& m, const CarrierSet& ideal) {
  if (ideal.all()) return false;
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = 0; y < m.size(); ++y)
      if (!ideal.test(m.odot(x, m.neg_minus(y))) && !ideal.test(m.odot(y, m.neg_minus(x)))) return false;
  return true;
}

std::optional<Index> summand_witness(const FinitePMV& m, const CarrierSet& ideal) {
  for (auto a : members(ideal))
    if (m.down_set(a) == ideal) {
      if (is_boolean(m, a)) return a;
      return std::nullopt;
    }
  return std::nullopt;
}

std::vector<ClassifiedIdeal> enumerate_ideals(const FinitePMV& m, std::size_t cap) {
  require_cap(m, cap);
  std::set<std::vector<std::size_t>> seen;
  std::vector<CarrierSet> found;
  std::deque<CarrierSet> queue{ideal_closure(m, empty_set(m.size()))};
  seen.insert(members(queue.front()));
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (Index x = 0; x < m.size(); ++x) {
      if (s.test(x)) continue;
      auto g = s;
      g.set(x);
      auto t = ideal_closure(m, g);
      if (seen.insert(members(t)).second) queue.push_back(t);
    }
    found.push_back(std::move(s));
  }
  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<ClassifiedIdeal> out;
  out.reserve(found.size());
  for (auto& s : found) {
    IdealClassification f;
    f.normal = is_normal(m, s);
    f.prime = is_prime(m, s);
    f.polar = polar(m, polar(m, s)) == s;
    f.summand = summand_witness(m, s).has_value();
    out.push_back({std::move(s), f});
  }
  return out;
}

std::size_t PolarLattice::index_of(const CarrierSet& s) const {
  for (std::size_t i = 0; i < polars.size(); ++i)
    if (polars[i] == s) return i;
  throw Error(ErrorCode::internal_inconsistency, to_string(s) + " is not a polar");
}

PolarLattice polar_lattice(const FinitePMV& m, std::size_t cap) {
  // Every polar is I⊥ for some ideal I, since X⊥ = ⟨X⟩⊥.
  PolarLattice lat;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& ideal : enumerate_ideals(m, cap)) {
    auto p = polar(m, ideal.members);
    if (seen.insert(members(p)).second) lat.polars.push_back(std::move(p));
  }
  std::sort(lat.polars.begin(), lat.polars.end(), canonical_less);
  const auto n = lat.polars.size();
  lat.meet.assign(n, std::vector<std::size_t>(n));
  lat.join.assign(n, std::vector<std::size_t>(n));
  lat.complement.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    lat.complement[i] = lat.index_of(polar(m, lat.polars[i]));
    for (std::size_t j = 0; j < n; ++j) {
      lat.meet[i][j] = lat.index_of(lat.polars[i] & lat.polars[j]);
      lat.join[i][j] = lat.index_of(polar(m, polar(m, lat.polars[i] | lat.polars[j])));
    }
  }
  return lat;
}

Quotient quotient(const FinitePMV& m, const CarrierSet& ideal) {
  if (!is_ideal(m, ideal)) throw Error(ErrorCode::precondition_failed, to_string(ideal) + " is not an ideal");
  if (!is_normal(m, ideal)) throw Error(ErrorCode::not_normal, to_string(ideal) + " is not normal");
  const auto n = m.size();
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> cls(n, unset);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (cls[x] != unset) continue;
    cls[x] = reps.size();
    for (Index y = x + 1; y < n; ++y)
      if (cls[y] == unset && ideal.test(m.odot(x, m.neg_minus(y))) && ideal.test(m.odot(y, m.neg_minus(x))))
        cls[y] = reps.size();
    reps.push_back(x);
  }
  const auto k = reps.size();
  std::vector<std::vector<Index>> oplus(k, std::vector<Index>(k));
  std::vector<Index> nm(k), nt(k);
  for (Index c = 0; c < k; ++c) {
    nm[c] = cls[m.neg_minus(reps[c])];
    nt[c] = cls[m.neg_tilde(reps[c])];
    for (Index d = 0; d < k; ++d) oplus[c][d] = cls[m.oplus(reps[c], reps[d])];
  }
  for (Index x = 0; x < n; ++x) {
    if (cls[m.neg_minus(x)] != nm[cls[x]] || cls[m.neg_tilde(x)] != nt[cls[x]])
      throw Error(ErrorCode::internal_inconsistency, "negation does not respect the congruence");
    for (Index y = 0; y < n; ++y)
      if (cls[m.oplus(x, y)] != oplus[cls[x]][cls[y]])
        throw Error(ErrorCode::internal_inconsistency, "⊕ does not respect the congruence");
  }
  FinitePMV algebra(std::move(oplus), std::move(nm), std::move(nt), cls[m.zero()], cls[m.one()]);
  return {std::move(algebra), std::move(cls), k == 1};
}

RepresentabilityReport is_representable(const FinitePMV& m) {
  for (Index a = 0; a < m.size(); ++a)
    if (!is_normal(m, polar_of(m, a)))
      return {false, a, "polar of " + std::to_string(a) + " is not a normal ideal"};
  return {true, std::nullopt, "every singleton polar is normal"};
}

std::vector<CarrierSet> subdirect_decomposition(const FinitePMV& m, std::size_t cap) {
  if (m.size() == 1) return {};
  std::vector<CarrierSet> primes;
  for (auto& ideal : enumerate_ideals(m, cap))
    if (ideal.flags.prime && ideal.flags.normal) primes.push_back(std::move(ideal.members));
  const auto bottom = singleton(m.size(), m.zero());
  const auto p = primes.size();
  for (std::size_t k = 1; k <= p; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      CarrierSet meet = full_set(m.size());
      for (auto i : pick) meet &= primes[i];
      if (meet == bottom) {
        std::vector<CarrierSet> out;
        for (auto i : pick) out.push_back(primes[i]);
        return out;
      }
      std::size_t i = k;
      while (i-- > 0 && pick[i] == p - k + i) {}
      if (i == static_cast<std::size_t>(-1)) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::no_decomposition, "prime normal ideals do not separate points");
}

CorrespondenceReport ideal_group_correspondence(std::span<const int> units, int scale, std::size_t cap) {
  CorrespondenceReport report;
  const auto k = units.size();
  if (k == 0) {
    report.normal_ideals = report.l_ideals = 1;
    report.mutually_inverse = report.order_preserving = true;
    report.table.push_back({full_set(1), {}});
    report.detail = "trivial algebra";
    return report;
  }
  if (scale < 1) throw Error(ErrorCode::precondition_failed, "scale must be positive");
  const auto fg = make_finite_gamma(units, cap);
  const auto& m = fg.algebra;

  std::vector<CarrierSet> normal;
  for (auto& ideal : enumerate_ideals(m, cap))
    if (ideal.flags.normal) normal.push_back(std::move(ideal.members));

  // Box points, last coordinate fastest.
  std::vector<std::vector<int>> box{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    const int r = scale * units[i];
    for (const auto& g : box)
      for (int v = -r; v <= r; ++v) {
        next.push_back(g);
        next.back().push_back(v);
      }
    box = std::move(next);
  }

  auto phi = [&](const CarrierSet& j) {
    CarrierSet h(box.size());
    std::vector<int> c(k);
    for (std::size_t b = 0; b < box.size(); ++b) {
      for (std::size_t i = 0; i < k; ++i) c[i] = std::min(std::abs(box[b][i]), units[i]);
      if (j.test(fg.index_of(c))) h.set(b);
    }
    return h;
  };
  auto kernel = [&](std::size_t mask) {
    CarrierSet h(box.size());
    for (std::size_t b = 0; b < box.size(); ++b) {
      bool in = true;
      for (std::size_t i = 0; i < k; ++i)
        if (!(mask >> i & 1u) && box[b][i] != 0) in = false;
      if (in) h.set(b);
    }
    return h;
  };
  auto psi = [&](std::size_t mask) {
    CarrierSet j(m.size());
    for (Index x = 0; x < m.size(); ++x) {
      bool in = true;
      for (std::size_t i = 0; i < k; ++i)
        if (!(mask >> i & 1u) && fg.coords[x][i] != 0) in = false;
      if (in) j.set(x);
    }
    return j;
  };

  const std::size_t masks = std::size_t{1} << k;
  report.normal_ideals = normal.size();
  report.l_ideals = masks;
  bool inverse = normal.size() == masks;
  std::vector<std::size_t> mask_of(normal.size(), masks);
  for (std::size_t n = 0; n < normal.size(); ++n) {
    const auto h = phi(normal[n]);
    for (std::size_t mask = 0; mask < masks; ++mask)
      if (kernel(mask) == h) mask_of[n] = mask;
    if (mask_of[n] == masks) {
      inverse = false;
      report.detail = "Φ" + to_string(normal[n]) + " is not a coordinate kernel";
      continue;
    }
    if (psi(mask_of[n]) != normal[n]) inverse = false;
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < k; ++i)
      if (mask_of[n] >> i & 1u) coords.push_back(i);
    report.table.push_back({normal[n], std::move(coords)});
  }
  for (std::size_t mask = 0; mask < masks; ++mask) {
    const auto j = psi(mask);
    if (std::find(normal.begin(), normal.end(), j) == normal.end() || phi(j) != kernel(mask)) {
      inverse = false;
      if (report.detail.empty()) report.detail = "Ψ∘Φ fails on a coordinate kernel";
    }
  }
  bool order = inverse;
  for (std::size_t a = 0; order && a < normal.size(); ++a)
    for (std::size_t b = 0; b < normal.size(); ++b) {
      const bool sub = normal[a].is_subset_of(normal[b]);
      const bool hsub = (mask_of[a] & ~mask_of[b]) == 0;
      if (sub != hsub) order = false;
    }
  report.mutually_inverse = inverse;
  report.order_preserving = order;
  if (report.detail.empty()) report.detail = inverse && order ? "bijection verified" : "order mismatch";
  return report;
}

}  // namespace pmvlab
