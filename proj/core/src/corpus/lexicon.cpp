#include "textnet/corpus/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "textnet/corpus/text.hpp"
#include "textnet/data.hpp"
#include "textnet/error.hpp"
#include "textnet/rng.hpp"

namespace textnet {

namespace fs = std::filesystem;

PosGuess guess_pos(std::string_view word) noexcept {
  if (word.ends_with("ly")) return PosGuess::adverb;
  if (word.ends_with("ing") || word.ends_with("ed")) return PosGuess::verb;
  if (word.ends_with("s")) return PosGuess::noun;
  return PosGuess::any;
}

namespace {

std::vector<std::string> content_lines(const fs::path& path) {
  const std::string text = read_file(path);
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, '\t')) fields.push_back(field);
  return fields;
}

PosGuess parse_pos(const std::string& text, const fs::path& path) {
  if (text == "any") return PosGuess::any;
  if (text == "noun") return PosGuess::noun;
  if (text == "verb") return PosGuess::verb;
  if (text == "adverb") return PosGuess::adverb;
  throw ConfigError(path.string() + ": unknown part of speech '" + text + "'");
}

bool is_lower_word(const std::string& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || c == '\'';
  });
}

bool has_vowel(std::string_view s) {
  return s.find_first_of("aeiouy") != std::string_view::npos;
}

}  // namespace

Lexicon Lexicon::load(const fs::path& stopwords, const fs::path& exceptions,
                      const fs::path& rules) {
  Lexicon lex;
  try {
    lex.stopword_checksum = fnv1a(read_file(stopwords));
    for (auto& line : content_lines(stopwords)) {
      if (!is_lower_word(line)) {
        throw ConfigError(stopwords.string() + ": stopword '" + line + "' is not a lowercase word");
      }
      lex.stopwords.insert(line);
    }
    for (auto& line : content_lines(exceptions)) {
      auto fields = split_tabs(line);
      if (fields.size() != 2 || !is_lower_word(fields[0]) || !is_lower_word(fields[1])) {
        throw ConfigError(exceptions.string() + ": expected lowercase word<TAB>lemma, got '" +
                          line + "'");
      }
      lex.lemma_exceptions[fields[0]] = fields[1];
    }
    for (auto& line : content_lines(rules)) {
      auto fields = split_tabs(line);
      if (fields.size() < 3 || fields.size() > 4 || fields[0].empty()) {
        throw ConfigError(rules.string() + ": expected suffix<TAB>replacement<TAB>pos, got '" +
                          line + "'");
      }
      SuffixRule rule;
      rule.suffix = fields[0];
      rule.replacement = fields[1] == "-" ? std::string{} : fields[1];
      rule.pos = parse_pos(fields[2], rules);
      if (fields.size() == 4) rule.min_stem = std::stoul(fields[3]);
      if (rule.replacement.size() > rule.suffix.size()) {
        throw ConfigError(rules.string() + ": rule '" + line + "' lengthens words");
      }
      lex.suffix_rules.push_back(std::move(rule));
    }
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument&) {
    throw ConfigError(rules.string() + ": bad min_stem column");
  }
  if (lex.stopwords.empty()) throw ConfigError(stopwords.string() + ": no stopwords");

  // Exception chains must settle; a cycle would break idempotence.
  const RuleLemmatizer lemmatizer(lex);
  for (const auto& [word, lemma] : lex.lemma_exceptions) {
    const std::string once = lemmatizer.lemma(word);
    if (lemmatizer.lemma(once) != once) {
      throw ConfigError(exceptions.string() + ": exception chain from '" + word +
                        "' does not settle");
    }
  }
  return lex;
}

Lexicon Lexicon::load_directory(const fs::path& dir) {
  return load(dir / "stopwords.txt", dir / "lemma_exceptions.tsv", dir / "suffix_rules.tsv");
}

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon = load_directory(data_dir() / "lexicon");
  return lexicon;
}

std::string RuleLemmatizer::step(const std::string& word) const {
  if (auto it = lexicon_->lemma_exceptions.find(word); it != lexicon_->lemma_exceptions.end()) {
    return it->second;
  }
  const PosGuess pos = guess_pos(word);
  for (const auto& rule : lexicon_->suffix_rules) {
    if (!word.ends_with(rule.suffix)) continue;
    if (rule.pos != PosGuess::any && rule.pos != pos) continue;
    const std::size_t stem_len = word.size() - rule.suffix.size();
    if (stem_len < rule.min_stem) continue;
    std::string stem = word.substr(0, stem_len);
    if (rule.pos == PosGuess::verb) {
      if (!has_vowel(stem)) continue;
      if (rule.replacement.empty() && stem.size() >= 3) {
        const char last = stem.back();
        static constexpr std::string_view kUndouble = "bgmnprt";
        if (last == stem[stem.size() - 2] && kUndouble.find(last) != std::string_view::npos) {
          stem.pop_back();
        }
      }
    }
    return stem + rule.replacement;
  }
  return word;
}

std::string RuleLemmatizer::lemma(std::string_view word) const {
  std::string current(word);
  // Rules never lengthen a word and exception chains are checked at load
  // time, so this settles quickly; the cap only guards hand-built lexicons.
  for (int i = 0; i < 32; ++i) {
    std::string next = step(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const Lexicon& lexicon) {
  if (lexicon.stopwords.empty()) throw ConfigError("lexicon has an empty stopword list");
  std::erase_if(tokens, [&](const std::string& t) { return lexicon.stopwords.contains(t); });
  return tokens;
}

TokenStream lemmatize(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                      const Lemmatizer& lemmatizer, std::string doc_id) {
  TokenStream stream{std::move(doc_id), {}};
  stream.lemmas.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (token.empty()) continue;
    std::string lemma = lemmatizer.lemma(token);
    if (lemma.empty() || lexicon.stopwords.contains(lemma)) continue;
    stream.lemmas.push_back(std::move(lemma));
  }
  return stream;
}

TokenStream lemmatize(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                      std::string doc_id) {
  return lemmatize(tokens, lexicon, RuleLemmatizer(lexicon), std::move(doc_id));
}

TokenStream preprocess(std::string_view plain_text, const Lexicon& lexicon, std::string doc_id) {
  return lemmatize(remove_stopwords(tokenize(plain_text), lexicon), lexicon, std::move(doc_id));
}

}  // namespace textnet
