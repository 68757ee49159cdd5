#include "textnet/corpus/grammar.hpp"

#include <cctype>
#include <sstream>

#include "textnet/data.hpp"
#include "textnet/error.hpp"
#include "textnet/rng.hpp"

namespace textnet {

namespace {

bool is_nonterminal(std::string_view token) {
  return token.size() > 2 && token.front() == '<' && token.back() == '>';
}

bool is_punctuation(std::string_view token) {
  return token == "." || token == "," || token == ";" || token == ":" || token == "?" ||
         token == "!";
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

}  // namespace

GibberishGrammar GibberishGrammar::parse(std::string_view text, std::string start_symbol) {
  GibberishGrammar g;
  g.start_ = std::move(start_symbol);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto where = [&] { return "grammar line " + std::to_string(line_no) + ": "; };
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() < 3 || !is_nonterminal(tokens[0]) || tokens[1] != "->") {
      throw ConfigError(where() + "expected '<name> -> alternatives'");
    }
    const std::string lhs = tokens[0].substr(1, tokens[0].size() - 2);
    auto& productions = g.rules_[lhs];
    Production current;
    auto flush = [&] {
      if (current.symbols.empty()) throw ConfigError(where() + "empty alternative");
      productions.push_back(std::move(current));
      current = Production{};
    };
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const std::string& t = tokens[i];
      if (t == "|") {
        flush();
      } else if (t.size() > 1 && t.front() == '@') {
        try {
          current.weight = std::stod(t.substr(1));
        } catch (const std::exception&) {
          throw ConfigError(where() + "bad weight '" + t + "'");
        }
      } else if (is_nonterminal(t)) {
        current.symbols.push_back({t.substr(1, t.size() - 2), true});
      } else {
        current.symbols.push_back({t, false});
        g.vocabulary_.insert(t);
      }
    }
    flush();
  }
  g.validate();
  return g;
}

GibberishGrammar GibberishGrammar::load(const std::filesystem::path& path,
                                        std::string start_symbol) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }
  return parse(text, std::move(start_symbol));
}

const GibberishGrammar& GibberishGrammar::bundled() {
  static const GibberishGrammar grammar = load(data_dir() / "grammar" / "scientific.cfg");
  return grammar;
}

void GibberishGrammar::validate() const {
  if (!rules_.contains(start_)) throw ConfigError("grammar has no rule for <" + start_ + ">");
  for (const auto& [lhs, productions] : rules_) {
    for (const auto& p : productions) {
      if (!(p.weight > 0.0)) {
        throw ConfigError("non-positive weight in a production of <" + lhs + ">");
      }
      for (const auto& s : p.symbols) {
        if (s.nonterminal && !rules_.contains(s.text)) {
          throw ConfigError("<" + s.text + "> is used by <" + lhs + "> but has no rule");
        }
      }
    }
  }
  // Productivity fixpoint: a nonterminal is productive once some production
  // consists only of terminals and productive nonterminals.
  std::set<std::string> productive;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [lhs, productions] : rules_) {
      if (productive.contains(lhs)) continue;
      for (const auto& p : productions) {
        bool ok = true;
        for (const auto& s : p.symbols) {
          if (s.nonterminal && !productive.contains(s.text)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          productive.insert(lhs);
          changed = true;
          break;
        }
      }
    }
  }
  for (const auto& [lhs, productions] : rules_) {
    if (!productive.contains(lhs)) {
      throw ConfigError("<" + lhs + "> can never derive a terminal string");
    }
  }
}

std::size_t count_words(std::string_view text) noexcept {
  std::size_t count = 0;
  bool in_word = false;
  bool has_letter = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_word && has_letter) ++count;
      in_word = has_letter = false;
    } else {
      in_word = true;
      has_letter = has_letter || std::isalpha(static_cast<unsigned char>(c));
    }
  }
  if (in_word && has_letter) ++count;
  return count;
}

namespace {

class Expander {
 public:
  Expander(const GibberishGrammar& g, Rng& rng, const GenerateOptions& opts)
      : grammar_(g), rng_(rng), opts_(opts) {}

  std::vector<std::string> expand(const std::string& symbol) {
    std::vector<std::string> out;
    // Explicit stack of (symbol, depth) processed left to right.
    std::vector<std::pair<const Symbol*, std::size_t>> stack;
    const Symbol root{symbol, true};
    stack.emplace_back(&root, 0);
    while (!stack.empty()) {
      auto [sym, depth] = stack.back();
      stack.pop_back();
      if (!sym->nonterminal) {
        out.push_back(sym->text);
        continue;
      }
      if (depth >= opts_.max_depth) {
        throw ConfigError("grammar expansion exceeded depth " + std::to_string(opts_.max_depth) +
                          " at <" + sym->text + ">; the grammar does not terminate");
      }
      const Production& p = choose(grammar_.rules().at(sym->text));
      for (auto it = p.symbols.rbegin(); it != p.symbols.rend(); ++it) {
        stack.emplace_back(&*it, depth + 1);
      }
    }
    return out;
  }

 private:
  const Production& choose(const std::vector<Production>& productions) {
    double total = 0.0;
    for (const auto& p : productions) total += p.weight;
    double r = uniform_unit(rng_) * total;
    for (const auto& p : productions) {
      if (r < p.weight) return p;
      r -= p.weight;
    }
    return productions.back();
  }

  const GibberishGrammar& grammar_;
  Rng& rng_;
  const GenerateOptions& opts_;
};

std::string render(const std::vector<std::string>& terminals) {
  std::string out;
  bool capitalize = true;
  for (const auto& t : terminals) {
    if (is_punctuation(t)) {
      out += t;
      capitalize = t == "." || t == "?" || t == "!";
      continue;
    }
    if (!out.empty()) out += ' ';
    std::string word = t;
    if (capitalize && !word.empty()) {
      word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
    }
    capitalize = false;
    out += word;
  }
  return out;
}

}  // namespace

RawDocument generate_gibberish(const GibberishGrammar& grammar, std::uint64_t seed,
                               std::size_t target_words, std::string doc_id,
                               const GenerateOptions& options) {
  if (target_words < 50) throw ConfigError("target_words must be at least 50");
  grammar.validate();
  Rng rng(derive_seed(seed, 0x67656e));
  Expander expander(grammar, rng, options);
  const std::size_t low = target_words - target_words / 5;
  const std::size_t high = target_words + target_words / 5;

  std::string body;
  std::size_t words = 0;
  while (words < target_words) {
    std::string paragraph;
    std::size_t n = 0;
    bool fits = false;
    for (std::size_t attempt = 0; attempt <= options.max_redraws; ++attempt) {
      paragraph = render(expander.expand(grammar.start_symbol()));
      n = count_words(paragraph);
      if (n == 0) throw ConfigError("start symbol expanded to a paragraph without words");
      if (words + n <= high) {
        fits = true;
        break;
      }
    }
    if (!fits) {
      if (words >= low) break;
      throw ConfigError("grammar cannot produce a paragraph short enough for target " +
                        std::to_string(target_words));
    }
    if (!body.empty()) body += "\n\n";
    body += paragraph;
    words += n;
  }
  body += '\n';
  if (doc_id.empty()) doc_id = "gibberish-" + std::to_string(seed);
  return RawDocument{std::move(doc_id), {}, std::move(body), Label::fake};
}

}  // namespace textnet
