#include "pmvlab/verify.hpp"

#include <chrono>
#include <functional>

#include "pmvlab/corpus.hpp"
#include "pmvlab/xi.hpp"

namespace pmvlab {

namespace {

struct Outcome {
  Status status = Status::pass;
  std::string witness;
  std::size_t samples = 0;
};

Outcome fail(std::string witness, std::size_t samples = 0) { return {Status::fail, std::move(witness), samples}; }

struct Property {
  const char* id;
  const char* statement;
  std::vector<int> criteria;
  std::function<Outcome(const VerifyOptions&)> run;
};

std::string first_violation(const AxiomReport& r) {
  if (r.violations.empty()) return {};
  const auto& v = r.violations.front();
  std::string w = v.axiom + " at ";
  for (const auto& e : v.elements) w += e + " ";
  for (auto i : v.witness) w += std::to_string(i) + " ";
  return w;
}

SampleOptions sample_options(const VerifyOptions& o, std::size_t samples) {
  return {samples, o.seed, kDefaultBoxRadius, 12};
}

std::size_t light(const VerifyOptions& o) { return std::max<std::size_t>(1, o.samples / 10); }

std::vector<CarrierSet> all_subsets(std::size_t n) {
  std::vector<CarrierSet> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) out.emplace_back(n, mask);
  return out;
}

// axioms -------------------------------------------------------------------

Outcome finite_axioms(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    const auto r = check_axioms(m);
    o.samples += r.instances;
    if (!r.passed) return fail(name + ": " + first_violation(r), o.samples);
  }
  return o;
}

Outcome symbolic_axioms(const VerifyOptions& opt) {
  Outcome o;
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto r = check_axioms_sampled(GammaAlgebra(p), opt.samples, opt.seed);
    o.samples += r.instances;
    if (!r.passed) return fail(name + ": " + first_violation(r), o.samples);
  }
  return o;
}

Outcome c3_mutations(const VerifyOptions&) {
  const auto c3 = make_finite_gamma({2}).algebra;
  auto table = c3.oplus_table();
  Outcome o;
  for (Index x = 0; x < c3.size(); ++x)
    for (Index y = 0; y < c3.size(); ++y)
      for (Index v = 0; v < c3.size(); ++v) {
        if (v == table[x][y]) continue;
        auto mutated = table;
        mutated[x][y] = v;
        FinitePMV m(mutated, c3.neg_minus_table(), c3.neg_tilde_table(), c3.zero(), c3.one());
        ++o.samples;
        if (check_axioms(m, {true}).passed)
          return fail("mutant (" + std::to_string(x) + "," + std::to_string(y) + ")->" + std::to_string(v) +
                      " passes every law", o.samples);
      }
  return o;
}

Outcome finite_commutative(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    std::vector<FinitePMV> family{m};
    for (const auto& ideal : enumerate_ideals(m))
      if (ideal.flags.normal) family.push_back(quotient(m, ideal.members).algebra);
    for (const auto& s : enumerate_subalgebras(m)) family.push_back(induced_subalgebra(m, s).algebra);
    for (const auto& a : family) {
      ++o.samples;
      if (check_axioms(a, {true}).passed && !classify(a).commutative)
        return fail(name + ": a derived algebra passes the axioms but is not commutative", o.samples);
    }
  }
  return o;
}

Outcome lgroup_laws(const VerifyOptions& opt) {
  Outcome o;
  auto family = chain_kind_presentations();
  for (auto& entry : symbolic_corpus()) family.push_back(std::move(entry));
  for (const auto& [name, p] : family) {
    const auto r = check_lgroup_laws(p, opt.samples, opt.seed);
    o.samples += r.instances;
    if (!r.passed) return fail(name + ": " + first_violation(r), o.samples);
  }
  return o;
}

Outcome gamma_sums(const VerifyOptions& opt) {
  Outcome o;
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto r = check_gamma_sums(GammaAlgebra(p), light(opt), opt.seed);
    o.samples += r.instances;
    if (!r.passed) return fail(name + ": " + first_violation(r), o.samples);
  }
  return o;
}

Outcome xi_roundtrip(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    const auto xi = xi_finite(m);
    const auto back = make_finite_gamma(xi.chain_units);
    ++o.samples;
    if (!is_isomorphism(back.algebra, m, xi.iso)) return fail(name + ": round trip is not an isomorphism");
  }
  return o;
}

Outcome nc_asymmetric(const VerifyOptions& opt) {
  const auto c = classify(GammaAlgebra(corpus_document("nc").presentation.value()), light(opt), opt.seed);
  if (c.symmetric) return fail("no sample with x⁻ ≠ x∼", light(opt));
  if (c.commutative) return fail("no sample with x ⊕ y ≠ y ⊕ x", light(opt));
  return {Status::pass, {}, light(opt)};
}

// ideals -------------------------------------------------------------------

Outcome generated_normal_sum(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    std::vector<CarrierSet> normal;
    for (auto& i : enumerate_ideals(m))
      if (i.flags.normal) normal.push_back(i.members);
    for (const auto& a : normal)
      for (const auto& b : normal) {
        ++o.samples;
        const auto g = generated_normal_ideal(m, a | b);
        if (g != oplus_set(m, a, b) || g != sum_set(m, a, b))
          return fail(name + ": " + to_string(a) + " and " + to_string(b), o.samples);
      }
  }
  return o;
}

Outcome polar_laws(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    const auto subsets = all_subsets(m.size());
    for (const auto& x : subsets) {
      ++o.samples;
      const auto p = polar(m, x);
      const auto pp = polar(m, p);
      if (!is_ideal(m, p)) return fail(name + ": polar of " + to_string(x) + " is not an ideal", o.samples);
      if (!x.is_subset_of(pp)) return fail(name + ": " + to_string(x) + " not inside its bipolar", o.samples);
      if (polar(m, pp) != p) return fail(name + ": triple polar differs at " + to_string(x), o.samples);
    }
    for (const auto& x : subsets)
      for (const auto& y : subsets)
        if (x.is_subset_of(y) && !polar(m, y).is_subset_of(polar(m, x)))
          return fail(name + ": polar not antitone at " + to_string(x) + " ⊆ " + to_string(y), o.samples);
  }
  return o;
}

Outcome boolean_downsets_normal(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (auto a : boolean_skeleton(m)) {
      ++o.samples;
      const auto d = m.down_set(a);
      if (!is_ideal(m, d) || !is_normal(m, d)) return fail(name + ": ↓" + std::to_string(a), o.samples);
    }
  return o;
}

Outcome quotients(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (const auto& ideal : enumerate_ideals(m)) {
      if (!ideal.flags.normal) continue;
      ++o.samples;
      const auto q = quotient(m, ideal.members);
      if (!check_axioms(q.algebra, {true}).passed)
        return fail(name + ": quotient by " + to_string(ideal.members) + " breaks a law", o.samples);
      const auto& pi = q.projection;
      for (Index x = 0; x < m.size(); ++x) {
        if ((pi[x] == q.algebra.zero()) != ideal.members.test(x)) return fail(name + ": kernel differs", o.samples);
        for (Index y = 0; y < m.size(); ++y)
          if (pi[m.odot(x, y)] != q.algebra.odot(pi[x], pi[y]) || pi[m.join(x, y)] != q.algebra.join(pi[x], pi[y]) ||
              pi[m.meet(x, y)] != q.algebra.meet(pi[x], pi[y]))
            return fail(name + ": projection does not preserve derived operations", o.samples);
      }
    }
  return o;
}

Outcome prime_equivalence(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (const auto& ideal : enumerate_ideals(m)) {
      if (!ideal.flags.normal) continue;
      ++o.samples;
      if (is_prime(m, ideal.members) != is_prime_by_residuals(m, ideal.members))
        return fail(name + ": prime tests disagree on " + to_string(ideal.members), o.samples);
    }
  return o;
}

Outcome ideal_correspondence(const VerifyOptions&) {
  const std::vector<std::vector<int>> cases{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
  Outcome o;
  for (const auto& units : cases)
    for (int scale : {1, 2}) {
      ++o.samples;
      const auto r = ideal_group_correspondence(units, scale);
      if (!r.mutually_inverse || !r.order_preserving || r.normal_ideals != r.l_ideals) {
        std::string w = "units";
        for (int u : units) w += " " + std::to_string(u);
        return fail(w + ": " + r.detail, o.samples);
      }
    }
  return o;
}

// summands -----------------------------------------------------------------

Outcome complement_unique(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (const auto& [i, j] : summand_pairs_by_definition(m)) {
      ++o.samples;
      if (j != polar(m, i)) return fail(name + ": complement of " + to_string(i) + " is not its polar", o.samples);
    }
  return o;
}

Outcome unique_decomposition(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (const auto& s : summand_ideals(m))
      for (Index x = 0; x < m.size(); ++x) {
        ++o.samples;
        std::vector<std::pair<Index, Index>> found;
        for (auto a : members(s.ideal))
          for (auto b : members(s.complement))
            if (m.oplus(a, b) == x) found.emplace_back(a, b);
        if (found.size() != 1 || found.front() != decompose(m, s.ideal, x))
          return fail(name + ": x=" + std::to_string(x) + " in " + to_string(s.ideal), o.samples);
      }
  return o;
}

Outcome sums_are_polars(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    const auto lat = polar_lattice(m);
    const auto sums = summand_ideals(m);
    for (const auto& s : sums) {
      ++o.samples;
      if (std::find(lat.polars.begin(), lat.polars.end(), s.ideal) == lat.polars.end())
        return fail(name + ": summand " + to_string(s.ideal) + " is not a polar", o.samples);
      if (!is_normal(m, s.ideal)) return fail(name + ": summand is not normal", o.samples);
      for (const auto& t : sums)
        if (!summand_witness(m, s.ideal & t.ideal))
          return fail(name + ": intersection of summands is not a summand", o.samples);
    }
  }
  return o;
}

Outcome unique_witness(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (const auto& s : summand_ideals(m)) {
      ++o.samples;
      std::size_t count = 0;
      for (auto a : boolean_skeleton(m))
        if (m.down_set(a) == s.ideal && s.ideal.test(a)) ++count;
      if (count != 1) return fail(name + ": " + std::to_string(count) + " witnesses for " + to_string(s.ideal), o.samples);
    }
  return o;
}

Outcome normal_split(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (const auto& s : summand_ideals(m))
      for (const auto& ideal : enumerate_ideals(m)) {
        if (!ideal.flags.normal) continue;
        ++o.samples;
        const auto& i = ideal.members;
        if (oplus_set(m, s.ideal & i, i & s.complement) != i)
          return fail(name + ": " + to_string(i) + " against " + to_string(s.ideal), o.samples);
      }
  return o;
}

Outcome boolean_iso(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    ++o.samples;
    const auto iso = sum_boolean_iso(m);
    if (iso.images.size() != summand_pairs_by_definition(m).size())
      return fail(name + ": |B(M)| differs from |Sum(M)|", o.samples);
  }
  return o;
}

Outcome sigma_projectable(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus())
    for (Index a = 0; a < m.size(); ++a) {
      ++o.samples;
      const auto p = polar_of(m, a);
      const auto pp = polar(m, p);
      if ((p & pp) != singleton(m.size(), m.zero()) || oplus_set(m, p, pp) != full_set(m.size()))
        return fail(name + ": a=" + std::to_string(a), o.samples);
    }
  return o;
}

Outcome projectability_chain(const VerifyOptions& opt) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    ++o.samples;
    const auto r = classify_projectability(m);
    if ((r.strongly_projectable && !r.projectable) || (r.projectable && !is_representable(m).representable))
      return fail(name + ": implication chain broken", o.samples);
  }
  for (const auto& [name, p] : symbolic_corpus()) {
    ++o.samples;
    const auto r = classify_projectability(p);
    if ((r.strongly_projectable && !r.projectable) ||
        (r.projectable && !is_representable(p, sample_options(opt, light(opt))).representable))
      return fail(name + ": implication chain broken", o.samples);
  }
  return o;
}

// ortho --------------------------------------------------------------------

Outcome finite_lub(const VerifyOptions&) {
  Outcome o;
  for (const auto& pair : finite_large_pairs()) {
    const auto r = lub_preservation_check(pair.super, pair.sub, 4);
    o.samples += r.checked;
    if (!r.passed()) return fail(pair.algebra + " ⊇ " + to_string(pair.sub) + ": " + r.violations.front(), o.samples);
  }
  return o;
}

Outcome rational_lub(const VerifyOptions& opt) {
  const auto r = lub_preservation_check(integer_in_rational(), 4, sample_options(opt, light(opt)));
  if (!r.passed()) return fail(r.violations.front(), r.checked);
  return {Status::pass, {}, r.checked};
}

Outcome lexp_completion(const VerifyOptions& opt) {
  const auto lexp = corpus_document("lexp").presentation.value();
  const auto o = orthocomplete_group(lexp);
  if (!classify_projectability(o.completed).strongly_projectable) return fail("completion is not strongly projectable");
  const auto cert = is_large(o.embedding, sample_options(opt, light(opt)), 16);
  if (cert.verdict == Verdict::inconclusive) return {Status::inconclusive, cert.failure, cert.entries.size()};
  if (cert.verdict != Verdict::large) return fail(cert.failure, cert.entries.size());
  const auto oc = is_orthocomplete(o.completed, sample_options(opt, light(opt)));
  if (!oc.orthocomplete) return fail(oc.detail, cert.entries.size() + oc.families);
  return {Status::pass, {}, cert.entries.size() + oc.families};
}

Outcome finite_identity(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    ++o.samples;
    const auto oc = orthocompletion(m);
    for (Index i = 0; i < m.size(); ++i)
      if (oc.embedding[i] != i) return fail(name + ": embedding is not the identity", o.samples);
    const auto r = is_orthocomplete(m);
    if (!r.orthocomplete) return fail(name + ": " + r.detail, o.samples);
  }
  return o;
}

Outcome idempotent(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, p] : symbolic_corpus()) {
    ++o.samples;
    const auto once = orthocomplete_group(p).completed;
    if (!(orthocomplete_group(once).completed == once)) return fail(name + ": O(O(A)) ≠ O(A)", o.samples);
  }
  return o;
}

Outcome large_in_completion(const VerifyOptions& opt) {
  Outcome o;
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto oc = orthocomplete_group(p);
    const auto cert = is_large(oc.embedding, sample_options(opt, light(opt) / 4 + 1), 16);
    o.samples += cert.entries.size();
    if (cert.verdict == Verdict::inconclusive) return {Status::inconclusive, name + ": " + cert.failure, o.samples};
    if (cert.verdict != Verdict::large) return fail(name + ": " + cert.failure, o.samples);
    if (!classify_projectability(oc.completed).strongly_projectable)
      return fail(name + ": completion is not strongly projectable", o.samples);
    const auto r = is_orthocomplete(oc.completed, sample_options(opt, light(opt) / 4 + 1));
    o.samples += r.families;
    if (!r.orthocomplete) return fail(name + ": " + r.detail, o.samples);
    if (classify_projectability(p).strongly_projectable && !(oc.completed == p) &&
        is_orthocomplete(p, sample_options(opt, 16)).orthocomplete)
      return fail(name + ": orthocomplete input is not its own completion", o.samples);
  }
  return o;
}

Outcome strong_unit(const VerifyOptions& opt) {
  Outcome o;
  for (const auto& [name, p] : symbolic_corpus()) {
    const auto r = strong_unit_check(orthocomplete_group(p), 64, sample_options(opt, light(opt)));
    o.samples += r.checked;
    if (r.verdict != Verdict::large)
      return {Status::inconclusive, name + ": " + std::to_string(r.exhausted) + " samples exceed the bound", o.samples};
  }
  return o;
}

Outcome polar_correspondence_prop(const VerifyOptions&) {
  Outcome o;
  const auto lexp = orthocomplete_group(corpus_document("lexp").presentation.value());
  const auto c = polar_correspondence(lexp.embedding);
  if (c.sub_polars != 4 || c.super_polars != 4)
    return fail("expected 4 ↔ 4 polars, got " + std::to_string(c.sub_polars) + " ↔ " + std::to_string(c.super_polars));
  o.samples = 1;
  for (const auto& pair : finite_large_pairs()) {
    ++o.samples;
    polar_correspondence(pair.super, pair.sub);
  }
  return o;
}

Outcome minimal_extension(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    ++o.samples;
    const auto e = minimal_projectable_extension(m);
    if (e.carrier != full_set(m.size()) || !e.strongly_projectable || !e.minimal)
      return fail(name + ": extension differs from the algebra", o.samples);
  }
  for (const auto& pair : finite_large_pairs()) {
    ++o.samples;
    const auto e = minimal_projectable_extension(pair.super, pair.sub);
    if (!e.strongly_projectable || !e.minimal || !pair.sub.is_subset_of(e.carrier))
      return fail(pair.algebra + " ⊇ " + to_string(pair.sub) + ": extension not minimal", o.samples);
  }
  for (const auto& [name, p] : symbolic_corpus()) {
    ++o.samples;
    const auto e = minimal_projectable_extension(p);
    if (!e.strongly_projectable || !e.contains_source || !e.within_orthocompletion)
      return fail(name + ": extension is not sandwiched or not strongly projectable", o.samples);
    if (name == "lexp" && !(e.extension == e.ortho.completed))
      return fail("lexp: extension differs from the orthocompletion", o.samples);
  }
  return o;
}

Outcome support_bridge(const VerifyOptions& opt) {
  Outcome o;
  for (const auto& [name, p] : symbolic_corpus()) {
    const GammaAlgebra ga(p);
    ElementSampler sampler(p, opt.seed);
    for (std::size_t s = 0; s < light(opt); ++s) {
      ++o.samples;
      const auto x = sampler.carrier_element();
      const auto y = sampler.carrier_element();
      const bool disjoint = ga.meet(x, y) == ga.zero();
      if (disjoint != (support(p, x) & support(p, y)).none())
        return fail(name + ": " + render(x) + ", " + render(y), o.samples);
    }
  }
  return o;
}

Outcome intersection_projectable(const VerifyOptions&) {
  Outcome o;
  for (const auto& [name, m] : finite_corpus()) {
    std::vector<CarrierSet> sp;
    for (const auto& s : enumerate_subalgebras(m))
      if (is_large(m, s).verdict == Verdict::large &&
          classify_projectability(induced_subalgebra(m, s).algebra).strongly_projectable)
        sp.push_back(s);
    for (const auto& a : sp)
      for (const auto& b : sp) {
        ++o.samples;
        const auto c = a & b;
        if (!is_subalgebra(m, c) || !classify_projectability(induced_subalgebra(m, c).algebra).strongly_projectable)
          return fail(name + ": " + to_string(a) + " ∩ " + to_string(b), o.samples);
      }
  }
  return o;
}

const std::vector<std::pair<std::string, std::vector<Property>>>& suites() {
  static const std::vector<std::pair<std::string, std::vector<Property>>> table{
      {"axioms",
       {
           {"axioms.finite-corpus", "every finite corpus algebra satisfies (A1)-(A8) and the lattice-order laws exhaustively", {1}, finite_axioms},
           {"axioms.symbolic-corpus", "every symbolic corpus algebra satisfies (A1)-(A8) on seeded samples", {1}, symbolic_axioms},
           {"axioms.c3-mutations", "every single-cell mutation of the C3 ⊕ table breaks a checked law", {1}, c3_mutations},
           {"axioms.finite-commutative", "finite algebras passing the axioms are commutative", {5}, finite_commutative},
           {"lgroup.laws", "ℓ-group distributivity, negation, positive meet and triangle laws on every chain kind", {11}, lgroup_laws},
           {"lgroup.gamma-sums", "a₁ ⊕ ··· ⊕ a_k = (a₁ + ··· + a_k) ∧ u for k ≤ 4", {11}, gamma_sums},
           {"lgroup.xi-roundtrip", "finite MV-algebras are rebuilt from their chain decomposition", {1}, xi_roundtrip},
           {"lgroup.nc-asymmetric", "the matrix interval has elements with x⁻ ≠ x∼", {1}, nc_asymmetric},
       }},
      {"ideals",
       {
           {"ideals.generated-normal-sum", "⟨A ∪ B⟩ₙ = A ⊕ B = {x : x ≤ a ⊕ b} for normal ideals A, B", {2}, generated_normal_sum},
           {"ideals.polar-laws", "polars are ideals, ⊥ is antitone, X ⊆ X⊥⊥ and X⊥ = X⊥⊥⊥", {3}, polar_laws},
           {"ideals.boolean-downsets", "↓a is a normal ideal for Boolean a", {4}, boolean_downsets_normal},
           {"ideals.quotients", "quotients satisfy the axioms and the projection is a homomorphism with the right kernel", {2}, quotients},
           {"ideals.prime-equivalence", "the two primality characterisations agree", {2}, prime_equivalence},
           {"ideals.group-correspondence", "normal ideals of Γ(Z^k,u) correspond to ℓ-ideals of Z^k for k ≤ 3", {12}, ideal_correspondence},
       }},
      {"summands",
       {
           {"summands.complement-unique", "if M = A ⊞ B then B = A⊥", {3}, complement_unique},
           {"summands.unique-decomposition", "every x is a ⊕ b for exactly one a ∈ A, b ∈ A⊥", {3}, unique_decomposition},
           {"summands.polar-and-meet", "summands are polars and are closed under intersection", {3}, sums_are_polars},
           {"summands.unique-witness", "every summand is ↓a for exactly one Boolean a", {3}, unique_witness},
           {"summands.normal-split", "I = (A ∩ I) ⊕ (I ∩ A⊥) for summands A and normal ideals I", {3}, normal_split},
           {"summands.boolean-iso", "a ↦ ↓a is a Boolean isomorphism B(M) → Sum(M)", {4}, boolean_iso},
           {"summands.sigma-projectable", "M = a⊥ ⊕ a⊥⊥ for every a", {5}, sigma_projectable},
           {"summands.projectability-chain", "strongly projectable ⇒ projectable ⇒ representable", {5, 10}, projectability_chain},
       }},
      {"ortho",
       {
           {"ortho.finite-lub", "lubs of sets of size ≤ 4 are preserved in every finite large pair", {6}, finite_lub},
           {"ortho.rational-lub", "lubs are preserved from Γ(Z,10) into Γ(Q,10)", {6}, rational_lub},
           {"ortho.lexp-completion", "the LEXP completion is strongly projectable, contains LEXP as a large subalgebra and has lubs of disjoint families", {7}, lexp_completion},
           {"ortho.finite-identity", "finite algebras are orthocomplete and their own completion", {7}, finite_identity},
           {"ortho.idempotent", "O(O(A)) = O(A)", {7}, idempotent},
           {"ortho.large-in-completion", "every symbolic corpus algebra is large in its strongly projectable, orthocomplete completion", {7}, large_in_completion},
           {"ortho.strong-unit", "the carried unit is strong in every completion", {8}, strong_unit},
           {"ortho.polar-correspondence", "Φ and Ψ are inverse isomorphisms of polar lattices", {9}, polar_correspondence_prop},
           {"ortho.minimal-extension", "the projectable extension is strongly projectable, sandwiched and minimal", {10}, minimal_extension},
           {"ortho.support-bridge", "x ∧ y = 0 iff Supp(x) ∩ Supp(y) = ∅", {7, 9}, support_bridge},
           {"ortho.intersection", "intersections of strongly projectable large subalgebras are strongly projectable", {10}, intersection_projectable},
       }},
  };
  return table;
}

PropertyRecord run_property(const Property& p, const VerifyOptions& options) {
  PropertyRecord rec{p.id, p.statement, p.criteria, Status::pass, {}, 0, options.seed, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto out = p.run(options);
    rec.status = out.status;
    rec.witness = std::move(out.witness);
    rec.samples = out.samples;
  } catch (const Error& e) {
    rec.status = Status::fail;
    rec.witness = e.what();
  }
  rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

int VerifyReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& r : records) {
    if (r.status == Status::fail) return 1;
    inconclusive = inconclusive || r.status == Status::inconclusive;
  }
  return inconclusive ? 3 : 0;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, props] : suites()) out.push_back(name);
  out.push_back("all");
  return out;
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  VerifyReport report{std::string(suite), options, {}};
  bool known = suite == "all";
  for (const auto& [name, props] : suites()) {
    if (suite != "all" && suite != name) continue;
    known = true;
    for (const auto& p : props) report.records.push_back(run_property(p, options));
  }
  if (!known) throw Error(ErrorCode::precondition_failed, "unknown suite " + std::string(suite));
  return report;
}

nlohmann::json to_json(const VerifyReport& report, bool with_runtime) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json j{{"id", r.id},
                     {"statement", r.statement},
                     {"criteria", r.criteria},
                     {"status", to_string(r.status)},
                     {"samples", r.samples},
                     {"seed", r.seed}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    records.push_back(std::move(j));
  }
  return {{"suite", report.suite},
          {"seed", report.options.seed},
          {"samples", report.options.samples},
          {"records", records}};
}

std::vector<FiniteLargePair> finite_large_pairs() {
  std::vector<FiniteLargePair> out;
  for (auto& [name, m] : finite_corpus())
    for (auto& s : enumerate_subalgebras(m))
      if (is_large(m, s).verdict == Verdict::large) out.push_back({name, m, s});
  return out;
}

Inclusion integer_in_rational() {
  return make_inclusion(corpus_document("z10").presentation.value(), corpus_document("q10").presentation.value(), {0});
}

std::vector<std::pair<std::string, SubdirectPresentation>> chain_kind_presentations() {
  auto lex = [](std::size_t depth) {
    LexVector v(depth, BigInt(0));
    v.front() = 3;
    return ChainValue(v);
  };
  std::vector<std::pair<std::string, SubdirectPresentation>> out;
  out.push_back({"zlex1", {{ChainKind::zlex(1)}, {{0}}, {{lex(1)}}}});
  out.push_back({"zlex3", {{ChainKind::zlex(3)}, {{0}}, {{lex(3)}}}});
  out.push_back({"q", {{ChainKind::rational()}, {{0}}, {{Rational(5, 2)}}}});
  out.push_back({"ncmatrix", {{ChainKind::ncmatrix()}, {{0}}, {{Affine{Rational(3), Rational(1)}}}}});
  out.push_back({"mixed", {{ChainKind::zlex(2), ChainKind::rational(), ChainKind::ncmatrix(), ChainKind::zlex(1)},
                           {{0, 3}, {1}, {2}},
                           {{lex(2), Rational(1), Affine{Rational(2), Rational(0)}, lex(1)}}}});
  return out;
}

}  // namespace pmvlab
