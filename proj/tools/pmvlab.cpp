#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pmvlab/corpus.hpp"
#include "pmvlab/document.hpp"
#include "pmvlab/ortho.hpp"
#include "pmvlab/verify.hpp"
#include "pmvlab/xi.hpp"

using namespace pmvlab;
using nlohmann::json;

namespace {

enum Exit { ok = 0, violation = 1, input_error = 2, inconclusive = 3 };

struct Common {
  bool as_json = false;
  std::uint64_t seed = 7;
  std::size_t samples = 10000;
  std::size_t bound = kDefaultLargeBound;
  std::size_t cap = kDefaultCarrierCap;
};

/// Corpus names are accepted in place of paths, e.g. "p6".
Document load(const std::string& where) {
  if (where.find('/') == std::string::npos && where.find('.') == std::string::npos) return corpus_document(where);
  return load_document(where);
}

json sets_json(const std::vector<CarrierSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(members(s));
  return out;
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int validate(const Common& c, const std::string& file) {
  const auto doc = load(file);
  if (doc.finite()) {
    const auto m = doc.algebra(c.cap);
    const auto r = check_axioms(m);
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"law", x.axiom}, {"witness", x.witness}});
    emit(c, {{"kind", to_string(doc.kind)}, {"size", m.size()}, {"passed", r.passed}, {"instances", r.instances}, {"violations", v}},
         std::string(r.passed ? "valid" : "INVALID") + ": " + std::to_string(m.size()) + " elements, " +
             std::to_string(r.violations.size()) + " violations\n");
    return r.passed ? ok : violation;
  }
  const auto& p = *doc.presentation;
  const auto pr = validate_presentation(p, c.samples, c.seed);
  json out{{"kind", "presentation"}, {"valid", pr.valid}, {"samples", pr.samples_checked}, {"detail", pr.detail}};
  if (pr.error) out["error"] = error_name(*pr.error);
  if (!pr.valid) {
    const std::string code = pr.error ? " (" + std::string(error_name(*pr.error)) + ")" : "";
    emit(c, out, "INVALID" + code + ": " + pr.detail + "\n");
    return violation;
  }
  const auto r = check_axioms_sampled(GammaAlgebra(p), c.samples, c.seed);
  out["axioms_passed"] = r.passed;
  out["axiom_samples"] = r.instances;
  if (!r.passed) out["first_violation"] = r.violations.front().axiom;
  emit(c, out, std::string(r.passed ? "valid" : "INVALID") + ": presentation, " + std::to_string(r.instances) +
                   " sampled triples\n");
  return r.passed ? ok : violation;
}

int analyze(const Common& c, const std::string& file) {
  const auto doc = load(file);
  if (doc.finite()) {
    const auto m = doc.algebra(c.cap);
    const auto ideals = enumerate_ideals(m);
    json ij = json::array();
    for (const auto& i : ideals)
      ij.push_back({{"members", members(i.members)},
                    {"flags", {{"normal", i.flags.normal}, {"prime", i.flags.prime}, {"polar", i.flags.polar}, {"summand", i.flags.summand}}}});
    const auto cls = classify(m);
    const auto proj = classify_projectability(m);
    const auto booleans = boolean_skeleton(m);
    json out{{"size", m.size()},
             {"ideals", ij},
             {"polars", sets_json(polar_lattice(m).polars)},
             {"booleans", booleans},
             {"commutative", cls.commutative},
             {"symmetric", cls.symmetric},
             {"projectable", proj.projectable},
             {"strongly_projectable", proj.strongly_projectable},
             {"representable", is_representable(m).representable},
             {"subdirect_decomposition", sets_json(subdirect_decomposition(m))}};
    if (cls.commutative) out["chain_units"] = xi_finite(m).chain_units;
    emit(c, out,
         std::to_string(m.size()) + " elements, " + std::to_string(ideals.size()) + " ideals, " +
             std::to_string(booleans.size()) + " Boolean elements, " +
             (proj.strongly_projectable ? "strongly projectable" : proj.projectable ? "projectable" : "not projectable") + "\n");
    return ok;
  }
  const auto& p = *doc.presentation;
  const auto lat = support_lattice(p);
  const auto proj = classify_projectability(p);
  json booleans = json::array();
  for (const auto& b : boolean_elements(p)) booleans.push_back(element_to_json(p, b));
  json out{{"blocks", lat.blocks},
           {"achievable_supports", sets_json(lat.achievable)},
           {"polar_supports", sets_json(lat.polar_supports)},
           {"atoms", sets_json(lat.atoms)},
           {"booleans", booleans},
           {"projectable", proj.projectable},
           {"strongly_projectable", proj.strongly_projectable},
           {"representable", is_representable(p, {std::min<std::size_t>(c.samples, 1000), c.seed}).representable}};
  if (!proj.witness.empty()) out["witness"] = proj.witness;
  emit(c, out,
       std::to_string(lat.polar_supports.size()) + " polar supports, " + std::to_string(lat.atoms.size()) + " atoms, " +
           (proj.strongly_projectable ? "strongly projectable" : proj.projectable ? "projectable" : "not projectable") +
           (proj.witness.empty() ? "" : " (" + proj.witness + ")") + "\n");
  return ok;
}

int summands(const Common& c, const std::string& file) {
  const auto doc = load(file);
  json list = json::array();
  std::string text;
  if (doc.finite()) {
    const auto m = doc.algebra(c.cap);
    sum_boolean_iso(m);
    for (const auto& s : summand_ideals(m)) {
      json parts = json::array();
      for (Index x = 0; x < m.size(); ++x) {
        const auto [a, b] = decompose(m, s.ideal, x);
        parts.push_back({x, a, b});
      }
      list.push_back({{"ideal", members(s.ideal)},
                      {"complement", members(s.complement)},
                      {"witness", s.witness},
                      {"complement_witness", s.complement_witness},
                      {"decompositions", parts}});
      text += "↓" + std::to_string(s.witness) + " = " + to_string(s.ideal) + "\n";
    }
  } else {
    const auto& p = *doc.presentation;
    for (const auto& s : summand_ideals(p)) {
      list.push_back({{"support", members(s.support)},
                      {"witness", element_to_json(p, s.witness)},
                      {"complement_witness", element_to_json(p, s.complement_witness)}});
      text += "↓" + render(s.witness) + "\n";
    }
  }
  emit(c, {{"summands", list}}, text);
  return ok;
}

int orthocomplete(const Common& c, const std::string& file, const std::string& out_path) {
  const auto doc = load(file);
  Document result = doc;
  if (!doc.finite()) {
    const auto o = orthocomplete_group(*doc.presentation);
    result = presentation_document(o.completed, json{{"kind", o.embedding.kind()}, {"source", o.embedding.source}});
  }
  const auto text = to_json(result).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::schema_error, "cannot write " + out_path);
    out << text;
    if (!c.as_json) std::cout << "wrote " << out_path << "\n";
  }
  return ok;
}

json certificate_json(const LargenessCertificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries) entries.push_back({{"element", e.element}, {"n", e.n}, {"witness", e.witness}});
  json out{{"verdict", to_string(cert.verdict)}, {"certificate", entries}};
  if (!cert.failure.empty()) out["failure"] = cert.failure;
  return out;
}

int large(const Common& c, const std::string& sub_file, const std::string& super_file) {
  const auto sub = load(sub_file);
  const auto super = load(super_file);
  LargenessCertificate cert;
  if (sub.finite() && super.finite()) {
    const auto a = sub.algebra(c.cap);
    const auto b = super.algebra(c.cap);
    const auto emb = find_embedding(a, b);
    if (!emb) throw Error(ErrorCode::precondition_failed, "the first algebra does not embed in the second");
    cert = is_large(b, from_members(b.size(), *emb), c.bound);
  } else if (!sub.finite() && !super.finite()) {
    const auto& sp = *sub.presentation;
    const auto& bp = *super.presentation;
    std::optional<Inclusion> inc;
    if (sp.blocks.size() == bp.blocks.size()) {
      std::vector<std::size_t> source(sp.blocks.size());
      for (std::size_t i = 0; i < source.size(); ++i) source[i] = i;
      inc = make_inclusion(sp, bp, std::move(source));
    } else if (auto o = orthocomplete_group(sp); o.completed == bp) {
      inc = o.embedding;
    } else {
      throw Error(ErrorCode::precondition_failed, "no coordinate inclusion between the presentations");
    }
    cert = is_large(*inc, {std::min<std::size_t>(c.samples, 1000), c.seed, kDefaultBoxRadius, 12}, c.bound);
  } else {
    throw Error(ErrorCode::precondition_failed, "cannot compare a finite and a symbolic algebra");
  }
  emit(c, certificate_json(cert),
       std::string(to_string(cert.verdict)) + ": " + std::to_string(cert.entries.size()) + " witnesses" +
           (cert.failure.empty() ? "" : " (" + cert.failure + ")") + "\n");
  switch (cert.verdict) {
    case Verdict::large: return ok;
    case Verdict::not_large: return violation;
    case Verdict::inconclusive: return inconclusive;
  }
  return ok;
}

int verify(const Common& c, const std::string& suite) {
  const auto report = run_suite(suite, {c.seed, c.samples});
  std::string text;
  for (const auto& r : report.records) {
    text += std::string(to_string(r.status)) + "  " + r.id;
    if (!r.witness.empty()) text += "  [" + r.witness + "]";
    text += "\n";
  }
  emit(c, to_json(report), text);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pmvlab: pseudo MV-algebras, ℓ-groups and orthocompletions"};
  app.require_subcommand(1);
  Common c;
  app.add_flag("--json", c.as_json, "Print machine-readable JSON on stdout");
  app.add_option("--seed", c.seed, "Sampling seed");
  app.add_option("--samples", c.samples, "Sample count for symbolic checks");
  app.add_option("--bound", c.bound, "Largest n tried in largeness searches");
  app.add_option("--cap", c.cap, "Carrier cap for expanding finite-gamma documents");

  std::string file, sub, super, out_path, suite = "all";
  auto* v = app.add_subcommand("validate", "Check axioms or a presentation");
  v->add_option("file", file, "Algebra document or corpus name")->required();
  auto* a = app.add_subcommand("analyze", "Ideals, polars, Boolean elements and classification");
  a->add_option("file", file)->required();
  auto* s = app.add_subcommand("summands", "Summand ideals and decompositions");
  s->add_option("file", file)->required();
  auto* o = app.add_subcommand("orthocomplete", "Write the orthocompletion");
  o->add_option("file", file)->required();
  o->add_option("-o,--output", out_path, "Output path (stdout if omitted)");
  auto* l = app.add_subcommand("large", "Largeness certificate for --sub inside --super");
  l->add_option("--sub", sub)->required();
  l->add_option("--super", super)->required();
  auto* f = app.add_subcommand("verify", "Run a verification suite");
  f->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  for (auto* cmd : {v, a, s, o, l, f}) {
    cmd->add_flag("--json", c.as_json);
    cmd->add_option("--seed", c.seed);
    cmd->add_option("--samples", c.samples);
    cmd->add_option("--bound", c.bound);
    cmd->add_option("--cap", c.cap);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : input_error;
  }

  try {
    if (*v) return validate(c, file);
    if (*a) return analyze(c, file);
    if (*s) return summands(c, file);
    if (*o) return orthocomplete(c, file, out_path);
    if (*l) return large(c, sub, super);
    if (*f) return verify(c, suite);
  } catch (const Error& e) {
    std::cerr << "pmvlab: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::bound_exhausted:
      case ErrorCode::non_termination: return inconclusive;
      case ErrorCode::not_large:
      case ErrorCode::correspondence_failure:
      case ErrorCode::iso_failure:
      case ErrorCode::internal_inconsistency:
      case ErrorCode::closure_violation: return violation;
      default: return input_error;
    }
  }
  return ok;
}
