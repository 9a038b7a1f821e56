#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "pmvlab/finite_pmv.hpp"
#include "pmvlab/gamma.hpp"
#include "pmvlab/subalgebra.hpp"
#include "pmvlab/xi.hpp"

using namespace testing;

namespace {

FinitePMV with_oplus(const FinitePMV& m, Index x, Index y, Index v) {
  auto t = m.oplus_table();
  t[x][y] = v;
  return FinitePMV(t, m.neg_minus_table(), m.neg_tilde_table(), m.zero(), m.one());
}

// A non-commutative candidate: left projection is associative but breaks A2.
FinitePMV left_projection() {
  return FinitePMV({{0, 0}, {1, 1}}, {1, 0}, {1, 0}, 0, 1);
}

}  // namespace

TEST_CASE("finite Γ tables agree with the integer-box oracle") {
  for (auto units : std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {1, 1}, {2, 2}, {1, 1, 1}, {3, 1}}) {
    CAPTURE(units.size());
    const auto fg = make_finite_gamma(units);
    const oracle::BoxGamma box(units);
    REQUIRE(fg.algebra.size() == box.points.size());
    for (Index x = 0; x < box.points.size(); ++x) {
      CHECK(fg.coords[x] == box.points[x]);
      CHECK(fg.algebra.neg_minus(x) == box.neg(x));
      CHECK(fg.algebra.neg_tilde(x) == box.neg(x));
      for (Index y = 0; y < box.points.size(); ++y) {
        CHECK(fg.algebra.oplus(x, y) == box.oplus(x, y));
        CHECK(fg.algebra.leq(x, y) == oracle::leq(fg.algebra, x, y));
        CHECK(fg.algebra.meet(x, y) == oracle::meet(fg.algebra, x, y));
      }
    }
  }
}

TEST_CASE("P6 carrier indexing") {
  const auto fg = make_finite_gamma({1, 2});
  const std::vector<std::vector<int>> expected{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
  CHECK(fg.coords == expected);
  const int c[] = {1, 1};
  CHECK(fg.index_of(c) == 4);
  CHECK(fg.algebra == finite("p6"));
}

TEST_CASE("make_finite_gamma rejects bad input") {
  CHECK_THROWS_AS(make_finite_gamma({}), Error);
  try {
    make_finite_gamma({10, 10, 10});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cap_exceeded);
  }
  CHECK(make_finite_gamma({10, 10, 10}, 2000).algebra.size() == 1331);
}

TEST_CASE("table construction validates shape and range") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal_inconsistency;
  };
  CHECK(code([] { FinitePMV({}, {}, {}, 0, 0); }) == ErrorCode::malformed_table);
  CHECK(code([] { FinitePMV({{0, 1}, {1}}, {1, 0}, {1, 0}, 0, 1); }) == ErrorCode::malformed_table);
  CHECK(code([] { FinitePMV({{0, 1}, {1, 2}}, {1, 0}, {1, 0}, 0, 1); }) == ErrorCode::malformed_table);
  CHECK(code([] { FinitePMV({{0, 1}, {1, 1}}, {1, 0}, {1, 0}, 0, 2); }) == ErrorCode::malformed_table);
}

TEST_CASE("corpus algebras satisfy every axiom") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    const auto r = check_axioms(m);
    CHECK(r.passed);
    CHECK(r.instances == m.size() * m.size() * m.size());
  }
}

TEST_CASE("every single-cell change to the C3 table breaks a law") {
  const auto c3 = finite("c3");
  std::size_t mutants = 0;
  for (Index x = 0; x < 3; ++x)
    for (Index y = 0; y < 3; ++y)
      for (Index v = 0; v < 3; ++v) {
        if (v == c3.oplus(x, y)) continue;
        ++mutants;
        CAPTURE(x);
        CAPTURE(y);
        CAPTURE(v);
        CHECK_FALSE(check_axioms(with_oplus(c3, x, y, v), {true}).passed);
      }
  CHECK(mutants == 18);
}

TEST_CASE("left projection fails A2 with witness x = 1") {
  const auto r = check_axioms(left_projection());
  REQUIRE_FALSE(r.passed);
  CHECK(r.violations.front().axiom == "A2");
  CHECK(r.violations.front().witness == std::vector<Index>{1});
}

TEST_CASE("derived operations match their defining formulas") {
  for (const auto& [name, m] : finite_corpus()) {
    for (Index x = 0; x < m.size(); ++x)
      for (Index y = 0; y < m.size(); ++y) {
        CHECK(m.odot(x, y) == formula::odot(m, x, y));
        CHECK(m.join(x, y) == formula::join(m, x, y));
        CHECK(m.meet(x, y) == formula::meet(m, x, y));
        CHECK(m.leq(x, y) == formula::leq(m, x, y));
      }
  }
}

TEST_CASE("term evaluation") {
  const auto c3 = finite("c3");
  const std::vector<Index> one{1}, two{1, 1};
  CHECK(eval(c3, Term::times, std::span<const Index>(one), 2) == 2);
  CHECK(eval(c3, Term::power, std::span<const Index>(one), 2) == 0);
  CHECK(eval(c3, Term::power, std::span<const Index>(one), 0) == 2);
  CHECK(eval(c3, Term::oplus, std::span<const Index>(two)) == 2);
  CHECK(eval(c3, Term::minus_left, std::span<const Index>(two)) == 0);
  CHECK_THROWS_AS(eval(c3, Term::oplus, std::span<const Index>(one)), Error);
  const std::vector<Index> out{1, 7};
  CHECK_THROWS_AS(eval(c3, Term::oplus, std::span<const Index>(out)), Error);
}

TEST_CASE("Boolean skeletons agree with idempotence") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    CHECK(boolean_skeleton(m) == oracle::booleans(m));
  }
  CHECK(boolean_skeleton(finite("p6")) == std::vector<Index>{0, 2, 3, 5});
}

TEST_CASE("classification of corpus algebras") {
  for (const auto& [name, m] : finite_corpus()) {
    const auto c = classify(m);
    CHECK(c.commutative);
    CHECK(c.symmetric);
    CHECK_FALSE(c.sampled);
  }
}

TEST_CASE("Riesz split in P6") {
  const auto p6 = finite("p6");
  const auto [a1, b1] = riesz_split(p6, 4, 3, 2);
  CHECK(p6.oplus(a1, b1) == 4);
  CHECK(p6.leq(a1, 3));
  CHECK(p6.leq(b1, 2));
  CHECK(a1 == 3);
  CHECK(b1 == 1);
  CHECK_THROWS_AS(riesz_split(p6, 5, 1, 1), Error);
}

TEST_CASE("subalgebras") {
  const auto p6 = finite("p6");
  const auto subs = enumerate_subalgebras(p6);
  for (const auto& s : subs) CHECK(is_subalgebra(p6, s));
  std::vector<std::vector<Index>> got;
  for (const auto& s : subs) got.push_back(members(s));
  const std::vector<std::vector<Index>> expected{{0, 5}, {0, 2, 3, 5}, {0, 1, 2, 3, 4, 5}};
  CHECK(got == expected);

  CHECK(members(generated_subalgebra(p6, singleton(6, 2))) == std::vector<Index>{0, 2, 3, 5});
  CHECK(members(generated_subalgebra(p6, singleton(6, 1))) == std::vector<Index>{0, 1, 2, 3, 4, 5});

  const auto sub = induced_subalgebra(p6, from_members(6, {0, 2, 3, 5}));
  CHECK(sub.algebra.size() == 4);
  CHECK(sub.to_parent == std::vector<Index>{0, 2, 3, 5});
  CHECK(check_axioms(sub.algebra).passed);
  CHECK_THROWS_AS(induced_subalgebra(p6, from_members(6, {0, 1, 5})), Error);
}

TEST_CASE("embeddings") {
  const auto c2 = finite("c2");
  const auto c3 = finite("c3");
  const auto p6 = finite("p6");
  const auto e = find_embedding(c2, p6);
  REQUIRE(e);
  CHECK(*e == std::vector<Index>{0, 5});
  CHECK_FALSE(find_embedding(c3, p6));
  const auto into_c5 = find_embedding(c3, make_finite_gamma({4}).algebra);
  REQUIRE(into_c5);
  CHECK(*into_c5 == std::vector<Index>{0, 2, 4});
  CHECK_FALSE(find_embedding(c3, finite("c2xc2")));
  CHECK_FALSE(find_embedding(p6, c3));
}

TEST_CASE("finite MV-algebras split into chains") {
  auto check = [](const FinitePMV& m, std::vector<int> units) {
    const auto xi = xi_finite(m);
    CHECK(xi.chain_units == units);
    CHECK(is_isomorphism(make_finite_gamma(xi.chain_units).algebra, m, xi.iso));
  };
  check(finite("c2"), {1});
  check(finite("c3"), {2});
  check(finite("p6"), {1, 2});
  check(finite("c2xc2"), {1, 1});
  check(make_finite_gamma({3, 1, 2}).algebra, {1, 2, 3});
  const auto trivial = xi_finite(FinitePMV({{0}}, {0}, {0}, 0, 0));
  CHECK(trivial.chain_units.empty());
  CHECK(trivial.iso == std::vector<Index>{0});
}

TEST_CASE("sampled random products round-trip through the chain split") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len(1, 3), unit(1, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> u(len(rng));
    for (auto& k : u) k = unit(rng);
    const auto m = make_finite_gamma(u).algebra;
    const auto xi = xi_finite(m);
    auto sorted = u;
    std::sort(sorted.begin(), sorted.end());
    CHECK(xi.chain_units == sorted);
    CHECK(is_isomorphism(make_finite_gamma(xi.chain_units).algebra, m, xi.iso));
  }
}

TEST_CASE("small powers and multiples") {
  const auto p6 = finite("p6");
  CHECK(p6.meet(3, 2) == 0);
  for (Index x = 0; x < p6.size(); ++x) {
    CHECK(power(p6, 1, x) == x);
    CHECK(power(p6, 0, x) == p6.one());
    CHECK(times(p6, 1, x) == x);
    CHECK(times(p6, 0, x) == p6.zero());
    CHECK(times(p6, 3, x) == p6.oplus(p6.oplus(x, x), x));
    CHECK(power(p6, 3, x) == p6.odot(p6.odot(x, x), x));
  }
}
