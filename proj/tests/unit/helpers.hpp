#pragma once

#include <initializer_list>
#include <string>

#include "pmvlab/corpus.hpp"
#include "pmvlab/presentation.hpp"

namespace testing {

using namespace pmvlab;

inline ChainValue lex(std::initializer_list<long long> v) {
  LexVector out;
  for (auto x : v) out.push_back(BigInt(x));
  return out;
}

inline ChainValue q(long long p, long long d = 1) { return Rational(p, d); }

inline ChainValue nc(Rational a, Rational b) { return Affine{std::move(a), std::move(b)}; }

inline GroupElement el(std::initializer_list<ChainValue> blocks) { return GroupElement{blocks}; }

inline SubdirectPresentation bundled(const std::string& name) { return corpus_document(name).presentation.value(); }

inline FinitePMV finite(const std::string& name) { return corpus_document(name).algebra(); }

}  // namespace testing
