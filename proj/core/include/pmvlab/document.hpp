#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pmvlab/finite_pmv.hpp"
#include "pmvlab/gamma.hpp"
#include "pmvlab/presentation.hpp"

namespace pmvlab {

enum class DocumentKind { finite_table, finite_gamma, presentation };

std::string_view to_string(DocumentKind kind);

/// A parsed algebra file. finite-gamma documents keep only their chain list
/// until algebra() is called.
struct Document {
  DocumentKind kind = DocumentKind::finite_table;
  std::optional<FinitePMV> table;
  std::vector<int> chains;
  std::optional<SubdirectPresentation> presentation;
  std::optional<nlohmann::json> embedding;

  bool finite() const noexcept { return kind != DocumentKind::presentation; }
  FinitePMV algebra(std::size_t cap = kDefaultCarrierCap) const;
};

/// Validates against the schema; SchemaError messages start with a JSON pointer.
Document parse_document(std::string_view text);
Document parse_document_json(const nlohmann::json& j);
Document load_document(const std::filesystem::path& path);

nlohmann::json to_json(const Document& doc);
/// Compact JSON with sorted keys.
std::string canonical_dump(const Document& doc);

Document table_document(const FinitePMV& m);
Document presentation_document(const SubdirectPresentation& p, std::optional<nlohmann::json> embedding = {});

nlohmann::json value_to_json(const ChainKind& kind, const ChainValue& v);
nlohmann::json element_to_json(const SubdirectPresentation& p, const GroupElement& x);
GroupElement element_from_json(const SubdirectPresentation& p, const nlohmann::json& j);

}  // namespace pmvlab
