#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "textnet/corpus/document.hpp"

namespace textnet {

struct Symbol {
  std::string text;
  bool nonterminal = false;
};

struct Production {
  std::vector<Symbol> symbols;
  double weight = 1.0;
};

/// Weighted context-free grammar for generating scientific-sounding
/// gibberish. Nonterminals are written <name>; anything else is a terminal.
///
/// File format, one rule per line:
///   <sentence> -> <subject> <verb> <object> . @3 | we <verb> <object> .
/// '@w' after an alternative sets its weight (default 1). A rule whose
/// left-hand side repeats appends alternatives. '#' starts a comment line.
/// Terminals "." "," ";" ":" attach to the preceding word when rendered.
class GibberishGrammar {
 public:
  static GibberishGrammar parse(std::string_view text, std::string start_symbol = "paragraph");
  static GibberishGrammar load(const std::filesystem::path& path,
                               std::string start_symbol = "paragraph");
  static const GibberishGrammar& bundled();

  const std::map<std::string, std::vector<Production>>& rules() const noexcept { return rules_; }
  const std::string& start_symbol() const noexcept { return start_; }
  const std::set<std::string>& vocabulary() const noexcept { return vocabulary_; }

  /// Throws ConfigError if a referenced nonterminal has no rule, the start
  /// symbol is missing, a weight is non-positive, or some nonterminal can
  /// never derive an all-terminal string.
  void validate() const;

 private:
  std::map<std::string, std::vector<Production>> rules_;
  std::string start_;
  std::set<std::string> vocabulary_;
};

struct GenerateOptions {
  /// Expansion deeper than this is treated as non-termination.
  std::size_t max_depth = 64;
  /// Re-draws allowed for a start-symbol expansion that would overshoot.
  std::size_t max_redraws = 200;
};

/// Expands the start symbol repeatedly until the document holds about
/// target_words words (always within +-20%). A pure function of
/// (grammar, seed, target_words). Throws ConfigError when target_words < 50
/// or the expansion depth cap is hit.
RawDocument generate_gibberish(const GibberishGrammar& grammar, std::uint64_t seed,
                               std::size_t target_words, std::string doc_id = {},
                               const GenerateOptions& options = {});

std::size_t count_words(std::string_view text) noexcept;

}  // namespace textnet
