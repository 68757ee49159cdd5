#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace textnet {

/// Splits text into lowercase words. A word is a maximal run of ASCII
/// letters, optionally joined by internal apostrophes (' or U+2019).
/// A trailing "'s" is split off as its own token "s". Hyphens, digits,
/// punctuation and other bytes separate words and are discarded.
std::vector<std::string> tokenize(std::string_view text);

/// Residual-markup check run after stripping, in place of reading each
/// document by eye.
struct LintReport {
  std::size_t letters = 0;
  std::size_t suspicious = 0;  // characters that should not survive stripping
  std::map<char, std::size_t> by_char;
  double suspicious_ratio() const noexcept {
    return letters == 0 ? 0.0 : static_cast<double>(suspicious) / static_cast<double>(letters);
  }
};

/// Counts characters typical of leftover markup or math: \ $ { } ^ _ & # ~ and digits.
LintReport lint_text(std::string_view text);

}  // namespace textnet
