#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "textnet/corpus/document.hpp"

namespace textnet {

/// Coarse part-of-speech class guessed from a word's ending.
enum class PosGuess : unsigned char { any, noun, verb, adverb };

PosGuess guess_pos(std::string_view word) noexcept;

/// "suffix -> replacement" applied when the word's guessed class matches
/// and at least min_stem characters remain before the suffix. Verb rules
/// with an empty replacement also undouble a final consonant (running -> run).
struct SuffixRule {
  std::string suffix;
  std::string replacement;
  PosGuess pos = PosGuess::any;
  std::size_t min_stem = 3;
};

struct Lexicon {
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, std::string> lemma_exceptions;
  std::vector<SuffixRule> suffix_rules;
  /// FNV-1a of the stopword file bytes, recorded in emitted artifacts.
  std::uint64_t stopword_checksum = 0;

  /// Stopwords: one per line. Exceptions: "word<TAB>lemma". Rules:
  /// "suffix<TAB>replacement<TAB>pos[<TAB>min_stem]" with pos one of
  /// any|noun|verb|adverb and "-" standing for an empty replacement.
  /// '#' starts a comment line in all three files.
  static Lexicon load(const std::filesystem::path& stopwords,
                      const std::filesystem::path& exceptions,
                      const std::filesystem::path& rules);
  /// Loads stopwords.txt, lemma_exceptions.tsv and suffix_rules.tsv from dir.
  static Lexicon load_directory(const std::filesystem::path& dir);
  /// The lexicon shipped in the source tree's data/lexicon directory.
  static const Lexicon& bundled();
};

/// Swappable word -> lemma mapping, so a tagger-backed lemmatizer can
/// replace the rule-based one.
class Lemmatizer {
 public:
  virtual ~Lemmatizer() = default;
  virtual std::string lemma(std::string_view word) const = 0;
};

/// Exception map first, then the first matching suffix rule, repeated until
/// the word stops changing. Idempotent by construction.
class RuleLemmatizer final : public Lemmatizer {
 public:
  explicit RuleLemmatizer(const Lexicon& lexicon) : lexicon_(&lexicon) {}
  std::string lemma(std::string_view word) const override;

 private:
  std::string step(const std::string& word) const;
  const Lexicon* lexicon_;
};

/// Throws ConfigError when the stopword list is empty.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const Lexicon& lexicon);

/// Maps every token to its lemma. Lemmas that land on a stopword are
/// dropped so the stream never carries one.
TokenStream lemmatize(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                      std::string doc_id = {});
TokenStream lemmatize(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                      const Lemmatizer& lemmatizer, std::string doc_id = {});

/// tokenize -> remove_stopwords -> lemmatize.
TokenStream preprocess(std::string_view plain_text, const Lexicon& lexicon,
                       std::string doc_id = {});

}  // namespace textnet
