#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmvlab/document.hpp"

namespace pmvlab {

/// Bundled example algebras, embedded from the repository's corpus/ directory.
struct CorpusEntry {
  std::string_view name;
  std::string_view text;
};

std::span<const CorpusEntry> corpus_entries();

/// PreconditionFailed for unknown names.
Document corpus_document(std::string_view name);

std::vector<std::pair<std::string, FinitePMV>> finite_corpus();
std::vector<std::pair<std::string, SubdirectPresentation>> symbolic_corpus();

}  // namespace pmvlab
