#include "textnet/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include "textnet/corpus/latex.hpp"
#include "textnet/error.hpp"
#include "textnet/parallel.hpp"
#include "textnet/rng.hpp"

namespace textnet {

std::uint64_t document_seed(std::uint64_t master, std::string_view doc_id) noexcept {
  return derive_seed(master, fnv1a(doc_id));
}

std::string document_text(const RawDocument& doc) {
  if (doc.source_path.extension() == ".tex") return strip_latex(doc.body).text;
  return doc.body;
}

IngestResult ingest(const std::vector<ManifestEntry>& entries, const Lexicon& lexicon,
                    std::uint64_t seed, const IngestOptions& options) {
  if (entries.empty()) throw DataError("empty corpus: the manifest lists no documents");

  struct Slot {
    std::optional<FeatureVector> row;
    std::optional<DocumentLint> lint;
    std::string reason;
  };
  std::vector<Slot> slots(entries.size());

  parallel_for(
      entries.size(),
      [&](std::size_t i) {
        const ManifestEntry& entry = entries[i];
        Slot& slot = slots[i];
        try {
          const RawDocument doc = load_document(entry);
          const std::string text = document_text(doc);
          slot.lint = DocumentLint{entry.id, lint_text(text)};
          const TokenStream stream = preprocess(text, lexicon, entry.id);
          FeatureVector fv =
              extract_features(stream, document_seed(seed, entry.id), options.extract).features;
          fv.label = entry.label;
          slot.row = std::move(fv);
        } catch (const Error& e) {
          slot.reason = e.what();
        }
      },
      options.workers);

  IngestResult result;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].lint) result.lint.push_back(std::move(*slots[i].lint));
    if (slots[i].row)
      result.rows.push_back(std::move(*slots[i].row));
    else
      result.rejected.push_back({entries[i].id, std::move(slots[i].reason)});
  }
  return result;
}

std::vector<ManifestEntry> write_gibberish_corpus(const GibberishGrammar& grammar,
                                                  std::uint64_t seed,
                                                  const std::filesystem::path& dir,
                                                  const GibberishCorpusOptions& options) {
  if (options.count == 0) throw ConfigError("gibberish corpus count must be positive");
  if (options.min_words < 50 || options.max_words < options.min_words)
    throw ConfigError("gibberish word range must satisfy 50 <= min_words <= max_words");
  // generate_gibberish stays within +-20% of its target, so these targets
  // keep every document inside [min_words, max_words].
  const auto lo = static_cast<std::size_t>(std::ceil(options.min_words / 0.8));
  const auto hi = static_cast<std::size_t>(std::floor(options.max_words / 1.2));
  if (lo > hi)
    throw ConfigError("gibberish word range is too narrow for the generator's +-20% tolerance");

  std::filesystem::create_directories(dir);
  std::vector<ManifestEntry> entries;
  entries.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::uint64_t doc_seed = derive_seed(seed, i + 1);
    Rng rng(doc_seed);
    const std::size_t target = lo + uniform_index(rng, hi - lo + 1);
    char id[64];
    std::snprintf(id, sizeof id, "%s_%03zu", options.id_prefix.c_str(), i + 1);
    const RawDocument doc = generate_gibberish(grammar, doc_seed, target, id);
    const std::filesystem::path file = std::string(id) + ".txt";
    write_file_atomic(dir / file, doc.body + "\n");
    entries.push_back({id, file, Label::fake});
  }
  return entries;
}

}  // namespace textnet
