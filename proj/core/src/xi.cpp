#include "pmvlab/xi.hpp"

#include <algorithm>
#include <numeric>

#include "pmvlab/gamma.hpp"

namespace pmvlab {

XiResult xi_finite(const FinitePMV& m) {
  if (m.size() == 1) return {{}, {0}};
  if (!classify(m).commutative)
    throw Error(ErrorCode::precondition_failed, "algebra is not commutative");

  const auto booleans = boolean_skeleton(m);
  std::vector<Index> atoms;
  for (auto a : booleans) {
    if (a == m.zero()) continue;
    bool minimal = true;
    for (auto b : booleans)
      if (b != m.zero() && b != a && m.leq(b, a)) minimal = false;
    if (minimal) atoms.push_back(a);
  }

  struct Factor {
    Index atom;
    std::vector<Index> chain;  // ↓atom in increasing order
  };
  std::vector<Factor> factors;
  for (auto a : atoms) {
    auto elems = members(m.down_set(a));
    for (auto x : elems)
      for (auto y : elems)
        if (!m.leq(x, y) && !m.leq(y, x))
          throw Error(ErrorCode::not_chain_factor, "factor below atom " + std::to_string(a) + " is not a chain");
    std::sort(elems.begin(), elems.end(), [&](Index x, Index y) { return m.leq(x, y) && x != y; });
    factors.push_back({a, std::move(elems)});
  }
  std::stable_sort(factors.begin(), factors.end(), [](const Factor& f, const Factor& g) {
    return f.chain.size() < g.chain.size();
  });

  XiResult result;
  for (const auto& f : factors) result.chain_units.push_back(static_cast<int>(f.chain.size()) - 1);

  std::size_t size = 1;
  for (int k : result.chain_units) size *= static_cast<std::size_t>(k + 1);
  if (size != m.size())
    throw Error(ErrorCode::not_chain_factor, "chain factors do not account for the whole carrier");

  const auto gamma = make_finite_gamma(result.chain_units, std::max(size, kDefaultCarrierCap));
  result.iso.resize(size);
  for (Index g = 0; g < size; ++g) {
    Index x = m.zero();
    for (std::size_t i = 0; i < factors.size(); ++i) x = m.oplus(x, factors[i].chain[gamma.coords[g][i]]);
    result.iso[g] = x;
  }
  if (!is_isomorphism(gamma.algebra, m, result.iso))
    throw Error(ErrorCode::not_chain_factor, "chain decomposition is not an isomorphism");
  return result;
}

}  // namespace pmvlab
