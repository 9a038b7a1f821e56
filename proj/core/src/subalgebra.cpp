#include "pmvlab/subalgebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace pmvlab {

bool is_subalgebra(const FinitePMV& m, const CarrierSet& s) {
  if (!s.test(m.zero()) || !s.test(m.one())) return false;
  const auto elems = members(s);
  for (auto x : elems) {
    if (!s.test(m.neg_minus(x)) || !s.test(m.neg_tilde(x))) return false;
    for (auto y : elems)
      if (!s.test(m.oplus(x, y))) return false;
  }
  return true;
}

CarrierSet generated_subalgebra(const FinitePMV& m, const CarrierSet& gens) {
  CarrierSet s = gens;
  s.set(m.zero());
  s.set(m.one());
  for (bool grew = true; grew;) {
    grew = false;
    const auto elems = members(s);
    for (auto x : elems) {
      for (auto z : {m.neg_minus(x), m.neg_tilde(x)})
        if (!s.test(z)) s.set(z), grew = true;
      for (auto y : elems) {
        auto z = m.oplus(x, y);
        if (!s.test(z)) s.set(z), grew = true;
      }
    }
  }
  return s;
}

FiniteSubalgebra induced_subalgebra(const FinitePMV& m, const CarrierSet& s) {
  if (!is_subalgebra(m, s)) throw Error(ErrorCode::closure_violation, to_string(s) + " is not a subalgebra");
  auto to_parent = members(s);
  std::vector<Index> local(m.size(), 0);
  for (Index i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = i;
  const auto n = to_parent.size();
  std::vector<std::vector<Index>> oplus(n, std::vector<Index>(n));
  std::vector<Index> nm(n), nt(n);
  for (Index i = 0; i < n; ++i) {
    nm[i] = local[m.neg_minus(to_parent[i])];
    nt[i] = local[m.neg_tilde(to_parent[i])];
    for (Index j = 0; j < n; ++j) oplus[i][j] = local[m.oplus(to_parent[i], to_parent[j])];
  }
  FinitePMV algebra(std::move(oplus), std::move(nm), std::move(nt), local[m.zero()], local[m.one()]);
  return {s, std::move(algebra), std::move(to_parent)};
}

std::vector<CarrierSet> enumerate_subalgebras(const FinitePMV& m, std::size_t cap) {
  if (m.size() > cap) throw Error(ErrorCode::cap_exceeded, "carrier exceeds cap " + std::to_string(cap));
  auto key = [](const CarrierSet& s) { return members(s); };
  std::set<std::vector<std::size_t>> seen;
  std::vector<CarrierSet> out;
  std::deque<CarrierSet> queue{generated_subalgebra(m, empty_set(m.size()))};
  seen.insert(key(queue.front()));
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (Index x = 0; x < m.size(); ++x) {
      if (s.test(x)) continue;
      auto g = s;
      g.set(x);
      auto t = generated_subalgebra(m, g);
      if (seen.insert(key(t)).second) queue.push_back(t);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<std::vector<Index>> find_embedding(const FinitePMV& a, const FinitePMV& b) {
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> image(a.size(), unset);
  std::vector<bool> used(b.size(), false);
  auto assign = [&](Index x, Index y, std::vector<Index>& trail) {
    if (image[x] != unset) return image[x] == y;
    if (used[y]) return false;
    image[x] = y;
    used[y] = true;
    trail.push_back(x);
    return true;
  };
  auto undo = [&](std::vector<Index>& trail) {
    for (auto x : trail) {
      used[image[x]] = false;
      image[x] = unset;
    }
    trail.clear();
  };
  // Propagates every forced value; false on conflict.
  auto propagate = [&](std::vector<Index>& trail) {
    for (bool changed = true; changed;) {
      changed = false;
      for (Index x = 0; x < a.size(); ++x) {
        if (image[x] == unset) continue;
        const auto before = trail.size();
        if (!assign(a.neg_minus(x), b.neg_minus(image[x]), trail) ||
            !assign(a.neg_tilde(x), b.neg_tilde(image[x]), trail))
          return false;
        for (Index y = 0; y < a.size(); ++y)
          if (image[y] != unset && !assign(a.oplus(x, y), b.oplus(image[x], image[y]), trail)) return false;
        changed = changed || trail.size() != before;
      }
    }
    return true;
  };
  std::vector<Index> root;
  if (!assign(a.zero(), b.zero(), root) || !assign(a.one(), b.one(), root) || !propagate(root))
    return std::nullopt;
  std::function<bool()> search = [&]() {
    Index x = 0;
    while (x < a.size() && image[x] != unset) ++x;
    if (x == a.size()) return true;
    for (Index y = 0; y < b.size(); ++y) {
      if (used[y]) continue;
      std::vector<Index> trail;
      if (assign(x, y, trail) && propagate(trail) && search()) return true;
      undo(trail);
    }
    return false;
  };
  if (!search()) return std::nullopt;
  return image;
}

}  // namespace pmvlab
