#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the FinitePMV tables they read.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmvlab/finite_pmv.hpp"

namespace oracle {

using Index = std::size_t;
using Set = std::vector<Index>;
using Q = boost::multiprecision::cpp_rational;

/// Γ(Z^k,u) on plain integer vectors, box enumerated with the last coordinate fastest.
struct BoxGamma {
  std::vector<int> units;
  std::vector<std::vector<int>> points;

  explicit BoxGamma(std::vector<int> u) : units(std::move(u)) {
    points = {{}};
    for (int k : units) {
      std::vector<std::vector<int>> next;
      for (const auto& p : points)
        for (int v = 0; v <= k; ++v) {
          next.push_back(p);
          next.back().push_back(v);
        }
      points = std::move(next);
    }
  }
  Index find(const std::vector<int>& p) const {
    return static_cast<Index>(std::find(points.begin(), points.end(), p) - points.begin());
  }
  Index oplus(Index x, Index y) const {
    std::vector<int> r(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) r[i] = std::min(points[x][i] + points[y][i], units[i]);
    return find(r);
  }
  Index neg(Index x) const {
    std::vector<int> r(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) r[i] = units[i] - points[x][i];
    return find(r);
  }
};

/// x ≤ y iff y = x ⊕ z for some z.
inline bool leq(const pmvlab::FinitePMV& m, Index x, Index y) {
  for (Index z = 0; z < m.size(); ++z)
    if (m.oplus(x, z) == y) return true;
  return false;
}

inline bool is_ideal(const pmvlab::FinitePMV& m, const std::vector<bool>& in) {
  if (!in[m.zero()]) return false;
  for (Index x = 0; x < m.size(); ++x) {
    if (!in[x]) continue;
    for (Index y = 0; y < m.size(); ++y) {
      if (leq(m, y, x) && !in[y]) return false;
      if (in[y] && !in[m.oplus(x, y)]) return false;
    }
  }
  return true;
}

inline Set to_set(const std::vector<bool>& in) {
  Set s;
  for (Index i = 0; i < in.size(); ++i)
    if (in[i]) s.push_back(i);
  return s;
}

/// Every ideal, by testing all subsets; sorted by (size, members).
inline std::vector<Set> ideals(const pmvlab::FinitePMV& m) {
  std::vector<Set> out;
  for (unsigned long mask = 0; mask < (1ul << m.size()); ++mask) {
    std::vector<bool> in(m.size());
    for (Index i = 0; i < m.size(); ++i) in[i] = mask >> i & 1ul;
    if (is_ideal(m, in)) out.push_back(to_set(in));
  }
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Greatest lower bound by the order alone.
inline Index meet(const pmvlab::FinitePMV& m, Index x, Index y) {
  for (Index g = 0; g < m.size(); ++g) {
    if (!leq(m, g, x) || !leq(m, g, y)) continue;
    bool greatest = true;
    for (Index h = 0; h < m.size(); ++h)
      if (leq(m, h, x) && leq(m, h, y) && !leq(m, h, g)) greatest = false;
    if (greatest) return g;
  }
  return m.size();
}

inline Set polar(const pmvlab::FinitePMV& m, const Set& x) {
  Set out;
  for (Index y = 0; y < m.size(); ++y) {
    bool disjoint = true;
    for (auto a : x) disjoint = disjoint && meet(m, a, y) == m.zero();
    if (disjoint) out.push_back(y);
  }
  return out;
}

inline Set booleans(const pmvlab::FinitePMV& m) {
  Set out;
  for (Index a = 0; a < m.size(); ++a)
    if (m.oplus(a, a) == a) out.push_back(a);
  return out;
}

/// 2×2 rational matrices [[a,b],[0,1]].
struct Matrix {
  Q m[2][2];
};

inline Matrix affine(Q a, Q b) { return {{{a, b}, {Q(0), Q(1)}}}; }

inline Matrix mul(const Matrix& x, const Matrix& y) {
  Matrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  return r;
}

inline Matrix inverse(const Matrix& x) {
  const Q det = x.m[0][0] * x.m[1][1] - x.m[0][1] * x.m[1][0];
  return {{{x.m[1][1] / det, -x.m[0][1] / det}, {-x.m[1][0] / det, x.m[0][0] / det}}};
}

/// Lexicographic three-way comparison.
inline int lex_compare(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace oracle
