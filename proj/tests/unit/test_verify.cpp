#include <doctest.h>

#include "helpers.hpp"
#include "pmvlab/verify.hpp"

using namespace testing;

TEST_CASE("suites are deterministic apart from runtimes") {
  const VerifyOptions opt{7, 300};
  for (const auto& suite : suite_names()) {
    CAPTURE(suite);
    const auto a = run_suite(suite, opt);
    const auto b = run_suite(suite, opt);
    CHECK(to_json(a, false) == to_json(b, false));
    CHECK(a.exit_code() == 0);
    for (const auto& r : a.records) {
      CAPTURE(r.id);
      CHECK(r.status == Status::pass);
      CHECK_FALSE(r.criteria.empty());
      CHECK(r.seed == 7);
    }
  }
}

TEST_CASE("suite names and ids") {
  CHECK(suite_names() == std::vector<std::string>{"axioms", "ideals", "summands", "ortho", "all"});
  CHECK_THROWS_AS(run_suite("bogus"), Error);
  const auto r = run_suite("axioms", {1, 100});
  CHECK(r.records.front().id == "axioms.finite-corpus");
  const auto j = to_json(r);
  CHECK(j.at("records").at(0).contains("runtime_ms"));
  CHECK_FALSE(to_json(r, false).at("records").at(0).contains("runtime_ms"));
}

TEST_CASE("every criterion is exercised by some property") {
  std::vector<bool> seen(13, false);
  for (const auto& r : run_suite("all", {7, 100}).records)
    for (int c : r.criteria) seen.at(c) = true;
  for (int c = 1; c <= 12; ++c) {
    CAPTURE(c);
    CHECK(seen[c]);
  }
}

TEST_CASE("exit codes") {
  VerifyReport r;
  CHECK(r.exit_code() == 0);
  r.records.push_back({.id = "x", .criteria = {1}, .status = Status::inconclusive});
  CHECK(r.exit_code() == 3);
  r.records.push_back({.id = "y", .criteria = {1}, .status = Status::fail});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("large pairs and the integer inclusion") {
  const auto pairs = finite_large_pairs();
  CHECK(pairs.size() >= finite_corpus().size());
  for (const auto& p : pairs) CHECK(is_large(p.super, p.sub).verdict == Verdict::large);
  const auto zq = integer_in_rational();
  CHECK(zq.kind() == "coordinate-embedding");
  CHECK(zq.contains(el({q(3)})));
  CHECK_FALSE(zq.contains(el({q(1, 2)})));
}
