#include "textnet/corpus/latex.hpp"

#include <array>
#include <cctype>
#include <set>

#include "textnet/error.hpp"

namespace textnet {

namespace {

// Environments whose whole body is math.
const std::set<std::string, std::less<>> kMathEnvironments = {
    "equation", "equation*", "align",     "align*",    "alignat",     "alignat*",
    "eqnarray", "eqnarray*", "gather",    "gather*",   "multline",    "multline*",
    "flalign",  "flalign*",  "math",      "displaymath", "dmath",     "subequations"};

// Environments dropped wholesale because their body is not running prose.
const std::set<std::string, std::less<>> kDroppedEnvironments = {
    "tabular",   "tabular*",     "tabularx",  "longtable",  "table",         "table*",
    "figure",    "figure*",      "wrapfigure", "verbatim",  "verbatim*",     "lstlisting",
    "minted",    "tikzpicture",  "picture",   "algorithm", "algorithmic",   "thebibliography",
    "array",     "matrix",       "pmatrix",   "bmatrix",   "comment",       "filecontents"};

// Commands removed together with all their immediately following arguments.
const std::set<std::string, std::less<>> kDroppedCommands = {
    "cite",         "citep",        "citet",         "citealp",      "citeauthor", "citeyear",
    "nocite",       "ref",          "eqref",         "pageref",      "autoref",    "cref",
    "Cref",         "label",        "url",           "includegraphics", "bibliography",
    "bibliographystyle", "usepackage", "documentclass", "input",     "include",    "newcommand",
    "renewcommand", "providecommand", "newenvironment", "renewenvironment", "def",  "setlength",
    "setcounter",   "addtolength",  "vspace",        "hspace",       "vskip",      "hskip",
    "thanks",       "author",       "affiliation",   "affil",        "email",      "address",
    "date",         "pagestyle",    "thispagestyle", "keywords",     "pacs",       "doi",
    "newtheorem",   "geometry",     "hypersetup",    "graphicspath", "color",      "textcolor",
    "fontsize",     "linespread",   "raisebox",      "rule",         "bibitem",    "footnotemark"};

class Stripper {
 public:
  explicit Stripper(std::string_view src) : src_(src) {}

  StripResult run() {
    while (pos_ < src_.size()) step();
    if (depth_ != 0) warn("unbalanced braces: " + std::to_string(depth_) + " group(s) left open");
    return {collapse(out_), std::move(warnings_)};
  }

 private:
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

  bool at(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void step() {
    const char c = src_[pos_];
    switch (c) {
      case '%':
        skip_comment();
        return;
      case '$':
        skip_dollar_math();
        return;
      case '\\':
        command();
        return;
      case '{':
        ++depth_;
        ++pos_;
        return;
      case '}':
        if (depth_ == 0) {
          warn("unmatched '}' at offset " + std::to_string(pos_));
        } else {
          --depth_;
        }
        ++pos_;
        return;
      case '~':
      case '&':
        out_ += ' ';
        ++pos_;
        return;
      case '^':
      case '_':
        ++pos_;
        return;
      default:
        out_ += c;
        ++pos_;
    }
  }

  void skip_comment() {
    while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    if (pos_ < src_.size()) ++pos_;
    // A comment swallows its newline and the next line's indentation, but a
    // following blank line still separates paragraphs.
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  // Skips to the end of the current paragraph; used to recover from
  // unterminated math.
  void skip_paragraph() {
    const auto blank = src_.find("\n\n", pos_);
    pos_ = blank == std::string_view::npos ? src_.size() : blank;
  }

  // Advances past `closing`; escaped characters and comments never close.
  bool skip_until(std::string_view closing) {
    while (pos_ < src_.size()) {
      if (at(closing)) {
        pos_ += closing.size();
        return true;
      }
      if (src_[pos_] == '\\') {
        pos_ += 2;
        continue;
      }
      if (src_[pos_] == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      ++pos_;
    }
    return false;
  }

  void skip_dollar_math() {
    const std::size_t start = pos_;
    const bool display = at("$$");
    pos_ += display ? 2 : 1;
    if (!skip_until(display ? "$$" : "$")) {
      warn("unterminated math starting at offset " + std::to_string(start));
      pos_ = start + (display ? 2 : 1);
      skip_paragraph();
    }
    out_ += ' ';
  }

  std::string read_name() {
    std::string name;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      name += src_[pos_++];
    }
    if (pos_ < src_.size() && src_[pos_] == '*') {
      name += '*';
      ++pos_;
    }
    return name;
  }

  void skip_spaces() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  // Skips one balanced {...} or [...] group starting at pos_.
  bool skip_group(char open, char close) {
    if (pos_ >= src_.size() || src_[pos_] != open) return false;
    const std::size_t start = pos_;
    int level = 0;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\') {
        pos_ += 2;
        continue;
      }
      if (c == open) ++level;
      if (c == close && --level == 0) {
        ++pos_;
        return true;
      }
      ++pos_;
    }
    warn("unterminated argument starting at offset " + std::to_string(start));
    return true;
  }

  void skip_arguments() {
    for (;;) {
      const std::size_t before = pos_;
      skip_spaces();
      if (skip_group('[', ']') || skip_group('{', '}')) continue;
      // Parameter markers of \newcommand{\x}[1]{...} and \def\x#1{...}.
      if (pos_ < src_.size() && src_[pos_] == '\\') {
        const std::size_t save = pos_;
        ++pos_;
        if (!read_name().empty()) continue;
        pos_ = save;
      }
      pos_ = before;
      return;
    }
  }

  std::string read_braced_name() {
    skip_spaces();
    if (pos_ >= src_.size() || src_[pos_] != '{') return {};
    const auto close = src_.find('}', pos_);
    if (close == std::string_view::npos) {
      warn("unterminated environment name at offset " + std::to_string(pos_));
      pos_ = src_.size();
      return {};
    }
    std::string name(src_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    return name;
  }

  void skip_environment(const std::string& name) {
    const std::string open = "\\begin{" + name + "}";
    const std::string close = "\\end{" + name + "}";
    int level = 1;
    while (pos_ < src_.size()) {
      if (at(open)) {
        ++level;
        pos_ += open.size();
      } else if (at(close)) {
        pos_ += close.size();
        if (--level == 0) return;
      } else {
        ++pos_;
      }
    }
    warn("environment '" + name + "' is never closed");
  }

  void command() {
    ++pos_;  // backslash
    if (pos_ >= src_.size()) return;
    const char next = src_[pos_];
    if (next == '[' || next == '(') {
      const std::size_t start = pos_ - 1;
      ++pos_;
      if (!skip_until(next == '[' ? "\\]" : "\\)")) {
        warn("unterminated math starting at offset " + std::to_string(start));
        pos_ = start + 2;
        skip_paragraph();
      }
      out_ += ' ';
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(next))) {
      ++pos_;
      static constexpr std::string_view kAccents = "'`^\"~=.";
      if (kAccents.find(next) != std::string_view::npos) {
        // \'e or \'{e}: keep the base letter inside the word.
        if (pos_ < src_.size() && src_[pos_] == '{') {
          ++pos_;
          if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            out_ += src_[pos_++];
          }
          if (pos_ < src_.size() && src_[pos_] == '}') ++pos_;
        }
        return;
      }
      if (next == '\\') skip_group('[', ']');
      out_ += ' ';
      return;
    }
    const std::string name = read_name();
    if (name == "begin") {
      const std::string env = read_braced_name();
      if (kMathEnvironments.contains(env) || kDroppedEnvironments.contains(env)) {
        skip_environment(env);
        out_ += ' ';
      } else {
        skip_arguments();
      }
      return;
    }
    if (name == "end") {
      read_braced_name();
      out_ += ' ';
      return;
    }
    if (name == "href") {
      // \href{url}{text}: keep the text.
      skip_spaces();
      skip_group('{', '}');
      return;
    }
    if (kDroppedCommands.contains(name)) {
      skip_arguments();
      out_ += ' ';
      return;
    }
    // Formatting or sectioning command: drop the name and any optional
    // argument; the braced content is processed as ordinary text.
    skip_spaces();
    while (skip_group('[', ']')) skip_spaces();
    if (pos_ >= src_.size() || src_[pos_] != '{') out_ += ' ';
  }

  static std::string collapse(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool space = false;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = true;
        continue;
      }
      if (space && !out.empty()) out += ' ';
      space = false;
      out += c;
    }
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::string out_;
  std::vector<std::string> warnings_;
};

}  // namespace

StripResult strip_latex(std::string_view source) {
  if (source.find('\0') != std::string_view::npos) {
    throw DataError("input looks binary (contains NUL bytes)");
  }
  return Stripper(source).run();
}

}  // namespace textnet
