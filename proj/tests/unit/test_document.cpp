#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "pmvlab/document.hpp"

using namespace testing;

namespace {

std::string schema_message(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::schema_error) return e.what();
    return "wrong code: " + std::string(e.what());
  }
  return "accepted";
}

bool mentions(const std::string& message, const std::string& pointer) {
  return message.find("SchemaError: " + pointer + ":") == 0;
}

}  // namespace

TEST_CASE("bundled corpus matches the files on disk") {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PMVLAB_CORPUS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const auto name = entry.path().stem().string();
    CAPTURE(name);
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(canonical_dump(corpus_document(name)) == canonical_dump(parse_document(ss.str())));
    CHECK(canonical_dump(load_document(entry.path())) == canonical_dump(corpus_document(name)));
  }
  CHECK(files == corpus_entries().size());
  CHECK(finite_corpus().size() == 4);
  CHECK(symbolic_corpus().size() == 6);
  CHECK_THROWS_AS(corpus_document("nope"), Error);
}

TEST_CASE("documents round-trip through JSON") {
  for (const auto& e : corpus_entries()) {
    CAPTURE(e.name);
    const auto doc = corpus_document(e.name);
    const auto again = parse_document_json(to_json(doc));
    CHECK(canonical_dump(again) == canonical_dump(doc));
    CHECK(again.kind == doc.kind);
  }
  const auto p6 = finite("p6");
  const auto doc = table_document(p6);
  CHECK(doc.kind == DocumentKind::finite_table);
  CHECK(parse_document(canonical_dump(doc)).algebra() == p6);
  CHECK(parse_document_json(to_json(presentation_document(bundled("nc")))).presentation == bundled("nc"));
}

TEST_CASE("kinds and finite algebras") {
  CHECK(to_string(DocumentKind::finite_gamma) == "finite-gamma");
  const auto c3 = corpus_document("c3");
  CHECK(c3.kind == DocumentKind::finite_gamma);
  CHECK(c3.finite());
  CHECK(c3.chains == std::vector<int>{2});
  CHECK(c3.algebra() == make_finite_gamma({2}).algebra);
  CHECK_FALSE(corpus_document("lexp").finite());
  CHECK_THROWS_AS(parse_document(R"({"kind":"finite-gamma","chains":[10,10,10]})").algebra(), Error);
}

TEST_CASE("schema errors carry a JSON pointer") {
  CHECK(mentions(schema_message("{"), "/"));
  CHECK(mentions(schema_message("[]"), "/"));
  CHECK(mentions(schema_message(R"({"kind":"cube"})"), "/kind"));
  CHECK(mentions(schema_message(R"({"kind":"finite-gamma","chains":[]})"), "/chains"));
  CHECK(mentions(schema_message(R"({"kind":"finite-gamma","chains":[2],"extra":1})"), "/extra"));
  CHECK(mentions(schema_message(R"({"kind":"finite-table","size":2,"oplus":[[0,1],[1,2]],"neg_minus":[1,0],"neg_tilde":[1,0],"zero":0,"one":1})"),
                 "/oplus/1/1"));
  CHECK(mentions(schema_message(R"({"kind":"finite-table","size":2,"oplus":[[0,1]],"neg_minus":[1,0],"neg_tilde":[1,0],"zero":0,"one":1})"),
                 "/oplus"));
  CHECK(mentions(schema_message(R"({"kind":"presentation","blocks":[{"type":"q","depth":2}],"linkage":[[0]],"unit":[["1/1"]]})"),
                 "/blocks/0/depth"));
  CHECK(mentions(schema_message(R"({"kind":"presentation","blocks":[{"type":"ncmatrix"}],"linkage":[[0]],"unit":[["0/1","1/1"]]})"),
                 "/unit/0/0"));
  CHECK(mentions(schema_message(R"({"kind":"presentation","blocks":[{"type":"zlex","depth":2}],"linkage":[[0]],"unit":[[1]]})"),
                 "/unit/0"));
}

TEST_CASE("parsing checks shape and leaves semantics to validation") {
  const auto doc = parse_document(
      R"({"kind":"presentation","blocks":[{"type":"q"},{"type":"q"}],"linkage":[[0,1]],"unit":[["1/1"],["1/1"]]})");
  const auto r = validate_presentation(*doc.presentation, 10, 0);
  CHECK_FALSE(r.valid);
  CHECK(r.error == ErrorCode::bad_partition);
}

TEST_CASE("element conversion") {
  const auto p = bundled("lexp");
  const auto x = el({lex({1, -3}), lex({1, 7})});
  CHECK(element_to_json(p, x).dump() == "[[1,-3],[1,7]]");
  CHECK(element_from_json(p, element_to_json(p, x)) == x);
  CHECK(element_to_json(bundled("q10"), el({q(1, 3)})).dump() == R"([["1/3"]])");
  CHECK(element_to_json(bundled("nc"), el({nc(2, Rational(-1, 2))})).dump() == R"([["2/1","-1/2"]])");
  CHECK_THROWS_AS(element_from_json(p, nlohmann::json::parse("[[1,2]]")), Error);
  const BigInt big = BigInt(1) << 80;
  const auto wide = el({LexVector{big, BigInt(0)}, LexVector{big, BigInt(0)}});
  CHECK(element_from_json(p, element_to_json(p, wide)) == wide);
}
