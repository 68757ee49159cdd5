#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace textnet {

struct StripResult {
  std::string text;
  /// Recoverable problems such as unbalanced braces or unterminated math.
  std::vector<std::string> warnings;
};

/// Reduces a LaTeX source to its prose. Comments, math (inline, display and
/// equation-like environments), citations and references are removed;
/// formatting commands are unwrapped; non-prose environments (tabular,
/// figure, verbatim, ...) are dropped with their content. Runs of whitespace
/// collapse to one space. The result never contains '\' or '$'.
/// Throws DataError on binary input (NUL bytes).
StripResult strip_latex(std::string_view source);

}  // namespace textnet
