#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "textnet/corpus/document.hpp"
#include "textnet/corpus/grammar.hpp"
#include "textnet/corpus/lexicon.hpp"
#include "textnet/corpus/text.hpp"
#include "textnet/features.hpp"

namespace textnet {

/// Seed for one document, derived from its id so that adding or reordering
/// manifest entries leaves every other document's features unchanged.
std::uint64_t document_seed(std::uint64_t master, std::string_view doc_id) noexcept;

/// Plain prose of a document: LaTeX sources (.tex) are stripped, anything
/// else is taken verbatim.
std::string document_text(const RawDocument& doc);

struct Rejection {
  std::string doc_id;
  std::string reason;
};

struct DocumentLint {
  std::string doc_id;
  LintReport report;
};

struct IngestResult {
  std::vector<FeatureVector> rows;  // manifest order
  std::vector<Rejection> rejected;  // manifest order
  std::vector<DocumentLint> lint;   // one per loaded document
};

struct IngestOptions {
  ExtractOptions extract;
  std::size_t workers = 0;
};

/// Loads, preprocesses and featurizes every entry. A failing document is
/// recorded in `rejected` and never aborts the run, so
/// rows + rejected == entries. Throws DataError for an empty manifest.
IngestResult ingest(const std::vector<ManifestEntry>& entries, const Lexicon& lexicon,
                    std::uint64_t seed, const IngestOptions& options = {});

struct GibberishCorpusOptions {
  std::size_t count = 60;
  std::size_t min_words = 1000;
  std::size_t max_words = 2000;
  std::string id_prefix = "gibberish";
};

/// Writes `count` generated documents into dir as <id>.txt, each holding
/// between min_words and max_words words, and returns their manifest
/// entries (class fake, paths relative to dir). Document i uses
/// derive_seed(seed, i + 1).
std::vector<ManifestEntry> write_gibberish_corpus(const GibberishGrammar& grammar,
                                                  std::uint64_t seed,
                                                  const std::filesystem::path& dir,
                                                  const GibberishCorpusOptions& options = {});

}  // namespace textnet
