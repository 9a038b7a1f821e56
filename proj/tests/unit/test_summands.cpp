#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "pmvlab/ortho.hpp"
#include "pmvlab/summands.hpp"

using namespace testing;

namespace {

using Pair = std::pair<std::vector<Index>, std::vector<Index>>;

// Pairs of ideals meeting in {0} whose generated ideal is everything.
std::vector<Pair> oracle_summand_pairs(const FinitePMV& m) {
  const auto all = oracle::ideals(m);
  std::vector<Pair> out;
  for (const auto& a : all)
    for (const auto& b : all) {
      oracle::Set meet;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
      if (meet != oracle::Set{m.zero()}) continue;
      bool covers = true;
      for (const auto& i : all)
        if (i.size() < m.size() && std::includes(i.begin(), i.end(), a.begin(), a.end()) &&
            std::includes(i.begin(), i.end(), b.begin(), b.end()))
          covers = false;
      if (covers) out.push_back({a, b});
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("summand ideals of P6") {
  const auto p6 = finite("p6");
  const auto s = summand_ideals(p6);
  REQUIRE(s.size() == 4);
  std::vector<Index> witnesses;
  for (const auto& d : s) witnesses.push_back(d.witness);
  CHECK(witnesses == std::vector<Index>{0, 2, 3, 5});
  CHECK(members(s[1].ideal) == std::vector<Index>{0, 1, 2});
  CHECK(members(s[1].complement) == std::vector<Index>{0, 3});
  CHECK(s[1].complement_witness == 3);
  CHECK(summand_ideals(finite("c3")).size() == 2);
}

TEST_CASE("summand pairs by definition agree with the oracle and with Boolean witnesses") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    std::vector<Pair> got;
    for (const auto& [a, b] : summand_pairs_by_definition(m)) {
      got.push_back({members(a), members(b)});
      CHECK(b == polar(m, a));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle_summand_pairs(m));
    CHECK(got.size() == oracle::booleans(m).size());
  }
}

TEST_CASE("decompositions are unique and match pair search") {
  for (const auto& [name, m] : finite_corpus()) {
    for (const auto& d : summand_ideals(m)) {
      for (Index x = 0; x < m.size(); ++x) {
        std::vector<std::pair<Index, Index>> found;
        for (auto a : members(d.ideal))
          for (auto b : members(d.complement))
            if (m.oplus(a, b) == x) found.push_back({a, b});
        REQUIRE(found.size() == 1);
        CHECK(decompose(m, d.ideal, x) == found.front());
      }
    }
  }
  const auto p6 = finite("p6");
  CHECK(decompose(p6, from_members(6, {0, 3}), 5) == std::pair<Index, Index>{3, 2});
  CHECK(decompose(p6, from_members(6, {0, 3}), 0) == std::pair<Index, Index>{0, 0});
  CHECK_THROWS_AS(decompose(p6, from_members(6, {0, 1}), 5), Error);
}

TEST_CASE("Sum is closed under intersection and consists of polars") {
  for (const auto& [name, m] : finite_corpus()) {
    const auto s = summand_ideals(m);
    auto in_sum = [&](const CarrierSet& x) {
      return std::any_of(s.begin(), s.end(), [&](const auto& d) { return d.ideal == x; });
    };
    for (const auto& a : s) {
      CHECK(polar(m, polar(m, a.ideal)) == a.ideal);
      for (const auto& b : s) CHECK(in_sum(a.ideal & b.ideal));
    }
  }
}

TEST_CASE("summands split every normal ideal") {
  for (const auto& [name, m] : finite_corpus())
    for (const auto& d : summand_ideals(m))
      for (const auto& i : enumerate_ideals(m))
        CHECK(oplus_set(m, d.ideal & i.members, i.members & d.complement) == i.members);
}

TEST_CASE("Boolean elements correspond to summands") {
  for (const auto& [name, m] : finite_corpus()) {
    const auto iso = sum_boolean_iso(m);
    CHECK(iso.booleans == oracle::booleans(m));
    for (std::size_t i = 0; i < iso.booleans.size(); ++i) CHECK(iso.images[i] == m.down_set(iso.booleans[i]));
  }
  CHECK(sum_boolean_iso(finite("p6")).booleans.size() == 4);
  CHECK(sum_boolean_iso(finite("c2")).booleans.size() == 2);
  CHECK(sum_boolean_iso(finite("c2xc2")).booleans.size() == 4);
}

TEST_CASE("pseudocomplements") {
  const auto p6 = finite("p6");
  CHECK(pseudocomplement(p6, 1) == 3);
  CHECK(pseudocomplement(p6, 0) == 5);
  CHECK(pseudocomplement(p6, 5) == 0);
  for (const auto& [name, m] : finite_corpus())
    for (Index a = 0; a < m.size(); ++a) {
      const auto b = pseudocomplement(m, a);
      for (Index x = 0; x < m.size(); ++x) CHECK((oracle::meet(m, x, a) == m.zero()) == oracle::leq(m, x, b));
    }
}

TEST_CASE("every element splits the algebra into its polar and double polar") {
  for (const auto& [name, m] : finite_corpus())
    for (Index a = 0; a < m.size(); ++a) {
      const auto p = polar_of(m, a);
      CHECK(oplus_set(m, p, polar(m, p)) == full_set(m.size()));
      CHECK((p & polar(m, p)) == singleton(m.size(), m.zero()));
    }
}

TEST_CASE("finite projectability") {
  for (const auto& [name, m] : finite_corpus()) {
    const auto r = classify_projectability(m);
    CHECK(r.projectable);
    CHECK(r.strongly_projectable);
    CHECK(r.witness.empty());
  }
}

TEST_CASE("symbolic Boolean elements and summands") {
  CHECK(boolean_elements(bundled("lexp")) == std::vector<GroupElement>{el({lex({0, 0}), lex({0, 0})}), el({lex({1, 0}), lex({1, 0})})});
  CHECK(boolean_elements(bundled("z2")).size() == 4);
  const auto o = orthocomplete_group(bundled("lexp")).completed;
  const auto s = summand_ideals(o);
  REQUIRE(s.size() == 4);
  CHECK(s[1].witness == el({lex({1, 0}), lex({0, 0})}));
  CHECK(s[1].complement_witness == el({lex({0, 0}), lex({1, 0})}));
}

TEST_CASE("symbolic decomposition in the completed lexicographic square") {
  const GammaAlgebra ga(orthocomplete_group(bundled("lexp")).completed);
  const auto w = el({lex({1, 0}), lex({0, 0})});
  const auto x = el({lex({1, -1}), lex({1, -2})});
  const auto [a, b] = decompose(ga, w, x);
  CHECK(a == el({lex({1, -1}), lex({0, 0})}));
  CHECK(b == el({lex({0, 0}), lex({1, -2})}));
  CHECK(ga.oplus(a, b) == x);
  CHECK_THROWS_AS(decompose(ga, el({lex({0, 1}), lex({0, 0})}), x), Error);
}

TEST_CASE("symbolic projectability") {
  const auto lexp = classify_projectability(bundled("lexp"));
  CHECK_FALSE(lexp.projectable);
  CHECK_FALSE(lexp.strongly_projectable);
  CHECK(lexp.witness == "a=((0,1),(0,0))");
  for (auto name : {"z10", "q10", "nc", "diag", "z2"}) {
    CAPTURE(name);
    const auto r = classify_projectability(bundled(name));
    CHECK(r.projectable);
    CHECK(r.strongly_projectable);
  }
  const auto o = orthocomplete_group(bundled("lexp")).completed;
  CHECK(classify_projectability(o).strongly_projectable);
  CHECK(pseudocomplement(o, el({lex({0, 1}), lex({0, 0})})) == el({lex({0, 0}), lex({1, 0})}));
  CHECK_THROWS_AS(pseudocomplement(bundled("lexp"), el({lex({0, 1}), lex({0, 0})})), Error);
}
