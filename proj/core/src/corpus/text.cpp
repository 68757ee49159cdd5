#include "textnet/corpus/text.hpp"

#include <cctype>

namespace textnet {

namespace {

bool is_letter(unsigned char c) noexcept { return std::isalpha(c) != 0 && c < 0x80; }

// Length of an apostrophe at text[i]: 1 for ASCII ', 3 for UTF-8 U+2019, else 0.
std::size_t apostrophe_at(std::string_view text, std::size_t i) noexcept {
  if (text[i] == '\'') return 1;
  if (text.substr(i, 3) == "\xE2\x80\x99") return 3;
  return 0;
}

void emit(std::string& word, std::vector<std::string>& out) {
  if (word.empty()) return;
  // Possessive: split "carmyle's" into "carmyle" and "s".
  if (word.size() > 2 && word.ends_with("'s")) {
    out.push_back(word.substr(0, word.size() - 2));
    out.emplace_back("s");
  } else {
    out.push_back(std::move(word));
  }
  word.clear();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string word;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (is_letter(c)) {
      word += static_cast<char>(std::tolower(c));
      ++i;
      continue;
    }
    if (const std::size_t len = apostrophe_at(text, i); len > 0) {
      // Apostrophes only count when joining two letter runs.
      const std::size_t after = i + len;
      if (!word.empty() && after < text.size() &&
          is_letter(static_cast<unsigned char>(text[after]))) {
        word += '\'';
        i = after;
        continue;
      }
    }
    emit(word, tokens);
    ++i;
  }
  emit(word, tokens);
  return tokens;
}

LintReport lint_text(std::string_view text) {
  static constexpr std::string_view kSuspicious = "\\${}^_&#~";
  LintReport report;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (is_letter(u)) {
      ++report.letters;
    } else if (std::isdigit(u) != 0 || kSuspicious.find(c) != std::string_view::npos) {
      ++report.suspicious;
      ++report.by_char[c];
    }
  }
  return report;
}

}  // namespace textnet
