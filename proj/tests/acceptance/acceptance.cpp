// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pmvlab/corpus.hpp"
#include "pmvlab/ortho.hpp"
#include "pmvlab/summands.hpp"
#include "pmvlab/verify.hpp"

using namespace pmvlab;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kSamples = 10000;

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

FinitePMV with_oplus(const FinitePMV& m, Index x, Index y, Index v) {
  auto t = m.oplus_table();
  t[x][y] = v;
  return FinitePMV(t, m.neg_minus_table(), m.neg_tilde_table(), m.zero(), m.one());
}

std::vector<CarrierSet> normal_ideals(const FinitePMV& m) {
  std::vector<CarrierSet> out;
  for (auto& c : enumerate_ideals(m))
    if (c.flags.normal) out.push_back(c.members);
  return out;
}

// Tables on {0..n-1} with 0 and n-1 as bounds, rows and columns of the
// bounds fixed by A2/A3, and every pair of negations swapping the bounds.
void for_each_candidate(std::size_t n, const std::function<void(const FinitePMV&)>& visit) {
  const Index top = n - 1;
  std::vector<std::pair<Index, Index>> free;
  for (Index x = 1; x < top; ++x)
    for (Index y = 1; y < top; ++y) free.push_back({x, y});
  std::vector<std::vector<Index>> negs;
  std::vector<Index> mid;
  for (Index i = 1; i < top; ++i) mid.push_back(i);
  do {
    std::vector<Index> neg{top};
    neg.insert(neg.end(), mid.begin(), mid.end());
    neg.push_back(0);
    negs.push_back(neg);
  } while (std::next_permutation(mid.begin(), mid.end()));

  std::vector<Index> cell(free.size(), 0);
  while (true) {
    std::vector<std::vector<Index>> t(n, std::vector<Index>(n, 0));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) t[x][y] = x == 0 ? y : y == 0 ? x : (x == top || y == top) ? top : 0;
    for (std::size_t i = 0; i < free.size(); ++i) t[free[i].first][free[i].second] = cell[i];
    for (const auto& a : negs)
      for (const auto& b : negs) visit(FinitePMV(t, a, b, 0, top));
    std::size_t i = 0;
    while (i < cell.size() && ++cell[i] == n) cell[i++] = 0;
    if (i == cell.size()) break;
  }
}

void criterion1() {
  for (const auto& [name, m] : finite_corpus()) require(check_axioms(m).passed, name + " fails an axiom");
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto r = check_axioms_sampled(GammaAlgebra(p), kSamples, kSeed);
    require(r.passed, name + " fails a sampled axiom");
    require(r.instances >= kSamples, name + " checked too few samples");
  }
  const auto c3 = corpus_document("c3").algebra();
  std::size_t mutants = 0;
  for (Index x = 0; x < 3; ++x)
    for (Index y = 0; y < 3; ++y)
      for (Index v = 0; v < 3; ++v) {
        if (v == c3.oplus(x, y)) continue;
        ++mutants;
        require(!check_axioms(with_oplus(c3, x, y, v), {true}).passed, "a C3 mutant passes every law");
      }
  require(mutants == 18, "expected 18 C3 mutants");
}

void criterion2() {
  for (const auto& [name, m] : finite_corpus()) {
    const auto ideals = normal_ideals(m);
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        CarrierSet below(m.size());
        for (auto x : members(a))
          for (auto y : members(b))
            for (Index z = 0; z < m.size(); ++z)
              if (oracle::leq(m, z, m.oplus(x, y))) below.set(z);
        const auto generated = generated_normal_ideal(m, a | b);
        require(generated == oplus_set(m, a, b), name + ": generated ideal differs from A⊕B");
        require(generated == below, name + ": generated ideal differs from the down-closure of A⊕B");
        require(sum_set(m, a, b) == below, name + ": sum_set differs from the down-closure of A⊕B");
      }
  }
}

void criterion3() {
  for (const auto& [name, m] : finite_corpus()) {
    const auto pairs = summand_pairs_by_definition(m);
    for (const auto& [a, b] : pairs) require(b == polar(m, a), name + ": complement is not the polar");
    const auto sum = summand_ideals(m);
    require(sum.size() == pairs.size(), name + ": Boolean enumeration misses summands");
    const auto booleans = oracle::booleans(m);
    for (const auto& d : sum) {
      for (Index x = 0; x < m.size(); ++x) {
        std::size_t ways = 0;
        for (auto a : members(d.ideal))
          for (auto b : members(d.complement)) ways += m.oplus(a, b) == x;
        require(ways == 1, name + ": decomposition is not unique");
      }
      require(polar(m, polar(m, d.ideal)) == d.ideal, name + ": summand is not a polar");
      for (const auto& e : sum) {
        const auto meet = d.ideal & e.ideal;
        bool found = false;
        for (const auto& f : sum) found = found || f.ideal == meet;
        require(found, name + ": Sum is not closed under intersection");
      }
      std::size_t witnesses = 0;
      for (auto a : booleans) witnesses += m.down_set(a) == d.ideal;
      require(witnesses == 1, name + ": Boolean witness is not unique");
    }
  }
}

void criterion4() {
  for (const auto& [name, m] : finite_corpus()) {
    const auto iso = sum_boolean_iso(m);
    require(iso.booleans == oracle::booleans(m), name + ": Boolean elements differ from idempotents");
    for (std::size_t i = 0; i < iso.booleans.size(); ++i) {
      const auto a = iso.booleans[i];
      require(iso.images[i] == m.down_set(a), name + ": image is not ↓a");
      require(polar(m, iso.images[i]) == m.down_set(m.neg_minus(a)), name + ": complement is not sent to the polar");
      for (std::size_t j = 0; j < iso.booleans.size(); ++j) {
        const auto b = iso.booleans[j];
        require(m.down_set(m.oplus(a, b)) == generated_normal_ideal(m, iso.images[i] | iso.images[j]),
                name + ": ⊕ is not sent to the generated ideal");
        require(m.down_set(m.odot(a, b)) == (iso.images[i] & iso.images[j]), name + ": ⊙ is not sent to ∩");
        if (i != j) require(iso.images[i] != iso.images[j], name + ": map is not injective");
      }
    }
  }
  require(summand_ideals(corpus_document("p6").algebra()).size() == 4, "|Sum(P6)| ≠ 4");
}

void criterion5() {
  for (const auto& [name, m] : finite_corpus())
    for (Index a = 0; a < m.size(); ++a) {
      const auto p = polar_of(m, a);
      const auto pp = polar(m, p);
      require((p & pp) == singleton(m.size(), m.zero()), name + ": a⊥ ∩ a⊥⊥ ≠ {0}");
      require(oplus_set(m, p, pp) == full_set(m.size()), name + ": a⊥ ⊕ a⊥⊥ ≠ M");
    }
  std::size_t passing = 0;
  auto visit = [&](const FinitePMV& m) {
    if (!check_axioms(m, {true}).passed) return;
    ++passing;
    require(classify(m).commutative, "a finite algebra passing the axioms is not commutative");
  };
  for (std::size_t n = 2; n <= 4; ++n) for_each_candidate(n, visit);
  // C2, C3, C2×C2 and the two labellings of C4.
  require(passing == 5, "table search found " + std::to_string(passing) + " algebras, expected 5");
  for (const auto& [name, m] : finite_corpus()) visit(m);
  for (auto units : std::vector<std::vector<int>>{{4}, {1, 3}, {2, 2}, {1, 1, 2}, {5, 1}})
    visit(make_finite_gamma(units).algebra);
}

void criterion6() {
  for (const auto& pair : finite_large_pairs())
    require(lub_preservation_check(pair.super, pair.sub, 4).passed(), pair.algebra + ": lub not preserved");
  const auto r = lub_preservation_check(integer_in_rational(), 4, {kSamples, kSeed, kDefaultBoxRadius, 12});
  require(r.passed(), "Γ(Z,10) ⊆ Γ(Q,10): " + (r.violations.empty() ? std::string() : r.violations.front()));
  require(r.checked >= 1000, "too few sampled sets for Γ(Z,10) ⊆ Γ(Q,10)");
}

void criterion7() {
  const auto lexp = corpus_document("lexp").presentation.value();
  const auto o = orthocomplete_group(lexp);
  require(classify_projectability(o.completed).strongly_projectable, "O(Γ(LEXP)) is not strongly projectable");
  const SampleOptions opt{1000, kSeed, 8, 12};
  const auto cert = is_large(o.embedding, opt, 16);
  require(cert.verdict == Verdict::large, "Γ(LEXP) is not large in its orthocompletion: " + cert.failure);
  const auto oc = is_orthocomplete(o.completed, opt);
  require(oc.orthocomplete, "a disjoint family in O(Γ(LEXP)) has no lub: " + oc.detail);
  require(oc.families > 0, "no disjoint families tested");
  for (const auto& [name, m] : finite_corpus()) {
    const auto f = orthocompletion(m);
    for (Index i = 0; i < m.size(); ++i) require(f.embedding[i] == i, name + ": orthocompletion is not the identity");
    require(is_orthocomplete(m).orthocomplete, name + " is not orthocomplete");
  }
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto once = orthocomplete_group(p).completed;
    require(orthocomplete_group(once).completed == once, name + ": O(O(A)) ≠ O(A)");
  }
}

void criterion8() {
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto r = strong_unit_check(orthocomplete_group(p), 64, {kSamples, kSeed, 8, 12});
    require(r.verdict == Verdict::large && r.exhausted == 0, name + ": unit is not strong in O(G)");
    require(r.checked >= kSamples, name + ": too few samples");
  }
}

void criterion9() {
  const auto lexp = corpus_document("lexp").presentation.value();
  const auto r = polar_correspondence(orthocomplete_group(lexp).embedding);
  require(r.sub_polars == 4 && r.super_polars == 4, "Γ(LEXP): expected 4 ↔ 4 polars");
  for (const auto& pair : finite_large_pairs()) {
    const auto f = polar_correspondence(pair.super, pair.sub);
    require(f.sub_polars == f.super_polars, pair.algebra + ": polar counts differ");
  }
}

void criterion10() {
  const auto p6 = corpus_document("p6").algebra();
  const auto d = minimal_projectable_extension(p6);
  require(d.carrier == full_set(p6.size()), "minimal extension of P6 is not P6");
  for (const auto& [name, m] : finite_corpus()) {
    const auto e = minimal_projectable_extension(m);
    require(e.strongly_projectable && e.minimal, name + ": extension is not minimal and strongly projectable");
  }
  for (const auto& pair : finite_large_pairs()) {
    const auto e = minimal_projectable_extension(pair.super, pair.sub);
    require(pair.sub.is_subset_of(e.carrier), pair.algebra + ": extension does not contain A");
    require(e.strongly_projectable && e.minimal, pair.algebra + ": extension fails minimality");
  }
  const auto lexp = minimal_projectable_extension(corpus_document("lexp").presentation.value());
  require(lexp.extension == lexp.ortho.completed, "minimal extension of Γ(LEXP) is not its orthocompletion");
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto e = minimal_projectable_extension(p);
    require(e.strongly_projectable, name + ": extension is not strongly projectable");
    require(e.contains_source && e.within_orthocompletion, name + ": extension is not between A and O(A)");
  }
}

void criterion11() {
  auto family = chain_kind_presentations();
  for (auto& entry : symbolic_corpus()) family.push_back(std::move(entry));
  for (const auto& [name, p] : family) {
    const auto r = check_lgroup_laws(p, kSamples, kSeed);
    require(r.passed, name + ": " + (r.violations.empty() ? std::string() : r.violations.front().axiom));
    require(r.instances >= kSamples, name + ": too few samples");
  }
}

void criterion12() {
  for (auto units : std::vector<std::vector<int>>{{1}, {4}, {1, 2}, {3, 2}, {1, 1, 1}, {2, 1, 2}}) {
    const auto r = ideal_group_correspondence(units, 2);
    const std::size_t expected = std::size_t{1} << units.size();
    require(r.mutually_inverse && r.order_preserving, "Φ/Ψ fail for k = " + std::to_string(units.size()) + ": " + r.detail);
    require(r.normal_ideals == expected && r.l_ideals == expected, "ideal counts are not 2^k");
    require(oracle::ideals(make_finite_gamma(units).algebra).size() == expected, "oracle ideal count is not 2^k");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)()>> criteria{
      {"pseudo MV-algebra axioms", criterion1},
      {"normal ideal sums", criterion2},
      {"summand ideals", criterion3},
      {"Boolean elements and Sum", criterion4},
      {"projectability and commutativity", criterion5},
      {"lub preservation", criterion6},
      {"orthocompletion", criterion7},
      {"strong unit in O(G)", criterion8},
      {"polar correspondence", criterion9},
      {"minimal strongly projectable extension", criterion10},
      {"ℓ-group laws", criterion11},
      {"ideals of Γ(Z^k,u)", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (why.empty()) {
      std::printf("PASS criterion %zu: %s (%.0f ms)\n", i + 1, criteria[i].first.c_str(), ms);
    } else {
      ++failed;
      std::printf("FAIL criterion %zu: %s: %s\n", i + 1, criteria[i].first.c_str(), why.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
