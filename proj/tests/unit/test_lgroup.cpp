#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "pmvlab/gamma.hpp"
#include "pmvlab/verify.hpp"

using namespace testing;

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(format_rational(Rational(10)) == "10/1");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("ncmatrix product") {
  const std::vector<ChainKind> b{ChainKind::ncmatrix()};
  const auto x = el({nc(2, 1)});
  const auto y = el({nc(3, -1)});
  CHECK(group_add(b, x, y) == el({nc(6, -1)}));
  const auto m = oracle::mul(oracle::affine(2, 1), oracle::affine(3, -1));
  CHECK(m.m[0][0] == 6);
  CHECK(m.m[0][1] == -1);
}

TEST_CASE("lex absolute value and negated join") {
  const std::vector<ChainKind> b{ChainKind::zlex(2)};
  CHECK(absolute(b, el({lex({-2, 3})})) == el({lex({2, -3})}));
  const auto j = group_join(b, el({lex({1, 2})}), el({lex({1, 5})}));
  CHECK(group_negate(b, j) == el({lex({-1, -5})}));
  CHECK(group_meet(b, el({lex({-1, -2})}), el({lex({-1, -5})})) == el({lex({-1, -5})}));
}

TEST_CASE("group_eval checks shape and arity") {
  const std::vector<ChainKind> b{ChainKind::zlex(2), ChainKind::rational()};
  const GroupElement bad = el({lex({1})});
  const GroupElement good = el({lex({1, 0}), q(1, 2)});
  CHECK_THROWS_AS(group_eval(b, GroupOp::add, std::vector<GroupElement>{good, bad}), Error);
  try {
    group_eval(b, GroupOp::add, std::vector<GroupElement>{good, bad});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::shape_mismatch);
  }
  CHECK(group_eval(b, GroupOp::pos, std::vector<GroupElement>{good}) == good);
  CHECK(group_eval(b, GroupOp::neg_part, std::vector<GroupElement>{good}) == group_identity(b));
}

TEST_CASE("lex order agrees with a plain lexicographic comparison") {
  const ChainKind k = ChainKind::zlex(3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> d(-3, 3);
  for (int i = 0; i < 2000; ++i) {
    std::vector<long long> a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
    LexVector x(a.begin(), a.end()), y(b.begin(), b.end());
    const int got = chain::compare(k, x, y);
    CHECK((got > 0) - (got < 0) == oracle::lex_compare(a, b));
  }
}

TEST_CASE("ncmatrix arithmetic agrees with 2x2 matrices") {
  const ChainKind k = ChainKind::ncmatrix();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(1, 9), s(-9, 9);
  for (int i = 0; i < 500; ++i) {
    const Rational a(d(rng), d(rng)), b(s(rng), d(rng)), c(d(rng), d(rng)), e(s(rng), d(rng));
    const auto sum = std::get<Affine>(chain::add(k, Affine{a, b}, Affine{c, e}));
    const auto m = oracle::mul(oracle::affine(a, b), oracle::affine(c, e));
    CHECK(sum.a == m.m[0][0]);
    CHECK(sum.b == m.m[0][1]);
    const auto inv = std::get<Affine>(chain::negate(k, Affine{a, b}));
    const auto mi = oracle::inverse(oracle::affine(a, b));
    CHECK(inv.a == mi.m[0][0]);
    CHECK(inv.b == mi.m[0][1]);
  }
}

TEST_CASE("ℓ-group laws on every chain kind") {
  for (const auto& [name, p] : chain_kind_presentations()) {
    CAPTURE(name);
    const auto r = check_lgroup_laws(p, 2000, 5);
    CHECK(r.passed);
  }
}

TEST_CASE("presentation validation") {
  const auto lexp = bundled("lexp");
  CHECK(validate_presentation(lexp, 2000, 1).valid);

  auto weak = lexp;
  weak.unit = el({lex({0, 1}), lex({0, 1})});
  auto r = validate_presentation(weak, 100, 1);
  CHECK_FALSE(r.valid);
  CHECK(r.error == ErrorCode::unit_not_strong);

  auto out_of_range = lexp;
  out_of_range.linkage = {{0, 2}};
  r = validate_presentation(out_of_range, 100, 1);
  CHECK(r.error == ErrorCode::bad_partition);

  auto diag = bundled("diag");
  diag.unit = el({lex({1}), lex({2})});
  CHECK(validate_presentation(diag, 100, 1).error == ErrorCode::unit_not_in_group);

  SubdirectPresentation linked_q{{ChainKind::rational(), ChainKind::rational()}, {{0, 1}}, el({q(1), q(1)})};
  CHECK(validate_presentation(linked_q, 100, 1).error == ErrorCode::bad_partition);

  SubdirectPresentation flat_nc{{ChainKind::ncmatrix()}, {{0}}, el({nc(1, 5)})};
  CHECK(validate_presentation(flat_nc, 100, 1).error == ErrorCode::unit_not_strong);

  for (const auto& [name, p] : symbolic_corpus()) {
    CAPTURE(name);
    CHECK(validate_presentation(p, 2000, 9).valid);
  }
}

TEST_CASE("sampler stays inside the group and the interval") {
  for (const auto& [name, p] : symbolic_corpus()) {
    ElementSampler s(p, 42);
    for (int i = 0; i < 300; ++i) {
      CHECK(in_group(p, s.group_element()));
      CHECK(in_interval(p, s.carrier_element()));
    }
  }
}
