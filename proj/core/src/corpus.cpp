#include "pmvlab/corpus.hpp"

namespace pmvlab {

namespace detail {
extern const CorpusEntry kCorpus[];
extern const std::size_t kCorpusSize;
}  // namespace detail

std::span<const CorpusEntry> corpus_entries() { return {detail::kCorpus, detail::kCorpusSize}; }

Document corpus_document(std::string_view name) {
  for (const auto& e : corpus_entries())
    if (e.name == name) return parse_document(e.text);
  throw Error(ErrorCode::precondition_failed, "no bundled algebra named " + std::string(name));
}

std::vector<std::pair<std::string, FinitePMV>> finite_corpus() {
  std::vector<std::pair<std::string, FinitePMV>> out;
  for (const auto& e : corpus_entries()) {
    auto doc = parse_document(e.text);
    if (doc.finite()) out.emplace_back(std::string(e.name), doc.algebra());
  }
  return out;
}

std::vector<std::pair<std::string, SubdirectPresentation>> symbolic_corpus() {
  std::vector<std::pair<std::string, SubdirectPresentation>> out;
  for (const auto& e : corpus_entries()) {
    auto doc = parse_document(e.text);
    if (!doc.finite()) out.emplace_back(std::string(e.name), std::move(*doc.presentation));
  }
  return out;
}

}  // namespace pmvlab
