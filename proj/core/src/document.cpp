#include "pmvlab/document.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace pmvlab {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::schema_error, (pointer.empty() ? "/" : pointer) + ": " + what);
}

void only_keys(const json& j, const std::string& at, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) schema_error(at, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) schema_error(at + "/" + key, "unknown key");
  }
}

const json& field(const json& j, const std::string& at, const char* key) {
  if (!j.contains(key)) schema_error(at + "/" + key, "missing");
  return j.at(key);
}

std::int64_t integer(const json& j, const std::string& at, std::int64_t lo = std::numeric_limits<std::int64_t>::min()) {
  if (!j.is_number_integer()) schema_error(at, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < lo) schema_error(at, "must be at least " + std::to_string(lo));
  return v;
}

std::size_t index(const json& j, const std::string& at) { return static_cast<std::size_t>(integer(j, at, 0)); }

const json& array(const json& j, const std::string& at) {
  if (!j.is_array()) schema_error(at, "expected an array");
  return j;
}

BigInt big_integer(const json& j, const std::string& at) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(at, e.what());
    }
  }
  schema_error(at, "expected an integer or integer string");
}

Rational rational(const json& j, const std::string& at) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) schema_error(at, "expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    schema_error(at, e.what());
  }
}

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

ChainKind parse_kind(const json& j, const std::string& at) {
  only_keys(j, at, {"type", "depth"});
  const auto& type = field(j, at, "type");
  if (!type.is_string()) schema_error(at + "/type", "expected a string");
  const auto t = type.get<std::string>();
  if (t == "zlex") {
    const auto depth = j.contains("depth") ? integer(j.at("depth"), at + "/depth", 1) : 1;
    return ChainKind::zlex(static_cast<std::size_t>(depth));
  }
  if (j.contains("depth")) schema_error(at + "/depth", "only zlex blocks have a depth");
  if (t == "q") return ChainKind::rational();
  if (t == "ncmatrix") return ChainKind::ncmatrix();
  schema_error(at + "/type", "unknown chain type \"" + t + "\"");
}

json kind_to_json(const ChainKind& k) {
  switch (k.type) {
    case ChainType::zlex: return {{"type", "zlex"}, {"depth", k.depth}};
    case ChainType::rational: return {{"type", "q"}};
    case ChainType::ncmatrix: return {{"type", "ncmatrix"}};
  }
  return {};
}

ChainValue parse_value(const ChainKind& kind, const json& j, const std::string& at) {
  array(j, at);
  switch (kind.type) {
    case ChainType::zlex: {
      if (j.size() != kind.depth) schema_error(at, "expected " + std::to_string(kind.depth) + " coordinates");
      LexVector v;
      for (std::size_t i = 0; i < j.size(); ++i) v.push_back(big_integer(j[i], at + "/" + std::to_string(i)));
      return v;
    }
    case ChainType::rational:
      if (j.size() != 1) schema_error(at, "expected one rational");
      return rational(j[0], at + "/0");
    case ChainType::ncmatrix: {
      if (j.size() != 2) schema_error(at, "expected [a, b]");
      Affine m{rational(j[0], at + "/0"), rational(j[1], at + "/1")};
      if (m.a <= 0) schema_error(at + "/0", "a must be positive");
      return m;
    }
  }
  schema_error(at, "unsupported chain");
}

Document parse_table(const json& j) {
  only_keys(j, "", {"kind", "size", "oplus", "neg_minus", "neg_tilde", "zero", "one"});
  const auto size = index(field(j, "", "size"), "/size");
  if (size == 0) schema_error("/size", "carrier must be non-empty");
  auto row_of = [&](const json& r, const std::string& at) {
    array(r, at);
    if (r.size() != size) schema_error(at, "expected " + std::to_string(size) + " entries");
    std::vector<Index> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto v = index(r[i], at + "/" + std::to_string(i));
      if (v >= size) schema_error(at + "/" + std::to_string(i), "not a carrier index");
      out.push_back(v);
    }
    return out;
  };
  const auto& op = array(field(j, "", "oplus"), "/oplus");
  if (op.size() != size) schema_error("/oplus", "expected " + std::to_string(size) + " rows");
  std::vector<std::vector<Index>> oplus;
  for (std::size_t i = 0; i < size; ++i) oplus.push_back(row_of(op[i], "/oplus/" + std::to_string(i)));
  auto nm = row_of(field(j, "", "neg_minus"), "/neg_minus");
  auto nt = row_of(field(j, "", "neg_tilde"), "/neg_tilde");
  const auto zero = index(field(j, "", "zero"), "/zero");
  const auto one = index(field(j, "", "one"), "/one");
  if (zero >= size) schema_error("/zero", "not a carrier index");
  if (one >= size) schema_error("/one", "not a carrier index");
  Document doc;
  doc.kind = DocumentKind::finite_table;
  doc.table.emplace(std::move(oplus), std::move(nm), std::move(nt), zero, one);
  return doc;
}

Document parse_gamma(const json& j) {
  only_keys(j, "", {"kind", "chains"});
  const auto& chains = array(field(j, "", "chains"), "/chains");
  if (chains.empty()) schema_error("/chains", "need at least one chain");
  Document doc;
  doc.kind = DocumentKind::finite_gamma;
  for (std::size_t i = 0; i < chains.size(); ++i)
    doc.chains.push_back(static_cast<int>(integer(chains[i], "/chains/" + std::to_string(i), 1)));
  return doc;
}

Document parse_presentation(const json& j) {
  only_keys(j, "", {"kind", "blocks", "linkage", "unit", "embedding"});
  SubdirectPresentation p;
  const auto& blocks = array(field(j, "", "blocks"), "/blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) p.blocks.push_back(parse_kind(blocks[i], "/blocks/" + std::to_string(i)));
  const auto& linkage = array(field(j, "", "linkage"), "/linkage");
  for (std::size_t c = 0; c < linkage.size(); ++c) {
    const auto at = "/linkage/" + std::to_string(c);
    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < array(linkage[c], at).size(); ++i)
      cls.push_back(index(linkage[c][i], at + "/" + std::to_string(i)));
    p.linkage.push_back(std::move(cls));
  }
  const auto& unit = array(field(j, "", "unit"), "/unit");
  if (unit.size() != p.blocks.size()) schema_error("/unit", "expected one value per block");
  for (std::size_t b = 0; b < unit.size(); ++b)
    p.unit.blocks.push_back(parse_value(p.blocks[b], unit[b], "/unit/" + std::to_string(b)));
  Document doc;
  doc.kind = DocumentKind::presentation;
  doc.presentation = std::move(p);
  if (j.contains("embedding")) {
    if (!j.at("embedding").is_object()) schema_error("/embedding", "expected an object");
    doc.embedding = j.at("embedding");
  }
  return doc;
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::finite_table: return "finite-table";
    case DocumentKind::finite_gamma: return "finite-gamma";
    case DocumentKind::presentation: return "presentation";
  }
  return "?";
}

FinitePMV Document::algebra(std::size_t cap) const {
  if (table) return *table;
  if (kind == DocumentKind::finite_gamma) return make_finite_gamma(chains, cap).algebra;
  throw Error(ErrorCode::precondition_failed, "presentation documents describe infinite algebras");
}

Document parse_document_json(const json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  const auto& kind = field(j, "", "kind");
  if (!kind.is_string()) schema_error("/kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "finite-table") return parse_table(j);
  if (k == "finite-gamma") return parse_gamma(j);
  if (k == "presentation") return parse_presentation(j);
  schema_error("/kind", "unknown kind \"" + k + "\"");
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error("", std::string("invalid JSON: ") + e.what());
  }
  return parse_document_json(j);
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("", "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

json value_to_json(const ChainKind& kind, const ChainValue& v) {
  switch (kind.type) {
    case ChainType::zlex: {
      json out = json::array();
      for (const auto& c : std::get<LexVector>(v)) out.push_back(big_to_json(c));
      return out;
    }
    case ChainType::rational: return json::array({format_rational(std::get<Rational>(v))});
    case ChainType::ncmatrix: {
      const auto& m = std::get<Affine>(v);
      return json::array({format_rational(m.a), format_rational(m.b)});
    }
  }
  return {};
}

json element_to_json(const SubdirectPresentation& p, const GroupElement& x) {
  check_shape(p.blocks, x);
  json out = json::array();
  for (std::size_t b = 0; b < p.blocks.size(); ++b) out.push_back(value_to_json(p.blocks[b], x.blocks[b]));
  return out;
}

GroupElement element_from_json(const SubdirectPresentation& p, const json& j) {
  array(j, "");
  if (j.size() != p.blocks.size()) schema_error("", "expected one value per block");
  GroupElement x;
  for (std::size_t b = 0; b < j.size(); ++b) x.blocks.push_back(parse_value(p.blocks[b], j[b], "/" + std::to_string(b)));
  return x;
}

json to_json(const Document& doc) {
  switch (doc.kind) {
    case DocumentKind::finite_table: {
      const auto& m = *doc.table;
      return {{"kind", "finite-table"},
              {"size", m.size()},
              {"oplus", m.oplus_table()},
              {"neg_minus", m.neg_minus_table()},
              {"neg_tilde", m.neg_tilde_table()},
              {"zero", m.zero()},
              {"one", m.one()}};
    }
    case DocumentKind::finite_gamma: return {{"kind", "finite-gamma"}, {"chains", doc.chains}};
    case DocumentKind::presentation: {
      const auto& p = *doc.presentation;
      json blocks = json::array();
      for (const auto& k : p.blocks) blocks.push_back(kind_to_json(k));
      json out{{"kind", "presentation"},
               {"blocks", blocks},
               {"linkage", p.linkage},
               {"unit", element_to_json(p, p.unit)}};
      if (doc.embedding) out["embedding"] = *doc.embedding;
      return out;
    }
  }
  return {};
}

std::string canonical_dump(const Document& doc) { return to_json(doc).dump(); }

Document table_document(const FinitePMV& m) {
  Document doc;
  doc.kind = DocumentKind::finite_table;
  doc.table = m;
  return doc;
}

Document presentation_document(const SubdirectPresentation& p, std::optional<json> embedding) {
  Document doc;
  doc.kind = DocumentKind::presentation;
  doc.presentation = p;
  doc.embedding = std::move(embedding);
  return doc;
}

}  // namespace pmvlab
