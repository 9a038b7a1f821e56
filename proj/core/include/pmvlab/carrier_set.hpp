#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pmvlab {

/// A subset of a finite carrier, one bit per element index.
using CarrierSet = boost::dynamic_bitset<>;

inline CarrierSet empty_set(std::size_t size) { return CarrierSet(size); }

inline CarrierSet full_set(std::size_t size) {
  CarrierSet s(size);
  s.set();
  return s;
}

inline CarrierSet singleton(std::size_t size, std::size_t i) {
  CarrierSet s(size);
  s.set(i);
  return s;
}

inline std::vector<std::size_t> members(const CarrierSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != CarrierSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

inline CarrierSet from_members(std::size_t size, const std::vector<std::size_t>& idx) {
  CarrierSet s(size);
  for (auto i : idx) s.set(i);
  return s;
}

/// Orders sets by cardinality, then by their sorted member lists.
inline bool canonical_less(const CarrierSet& a, const CarrierSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return members(a) < members(b);
}

std::string to_string(const CarrierSet& s);

}  // namespace pmvlab
