#include "textnet/corpus/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "textnet/error.hpp"

namespace textnet {

namespace fs = std::filesystem;

std::string_view to_string(Label label) noexcept {
  return label == Label::real ? "real" : "fake";
}

Label parse_label(std::string_view text) {
  if (text == "real") return Label::real;
  if (text == "fake") return Label::fake;
  throw DataError("unknown class label '" + std::string(text) + "' (expected real or fake)");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const fs::path& path, std::string_view contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw DataError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw DataError("cannot open manifest " + manifest.string());
  const fs::path base = manifest.parent_path();
  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw DataError(manifest.string() + ":" + std::to_string(line_no) +
                      ": expected id<TAB>path<TAB>class");
    }
    if (!seen.insert(fields[0]).second) {
      throw DataError(manifest.string() + ":" + std::to_string(line_no) + ": duplicate id '" +
                      fields[0] + "'");
    }
    fs::path path = fields[1];
    if (path.is_relative()) path = base / path;
    entries.push_back({fields[0], path.lexically_normal(), parse_label(fields[2])});
  }
  return entries;
}

void write_manifest(const fs::path& manifest, const std::vector<ManifestEntry>& entries) {
  std::ostringstream out;
  out << "# id\tpath\tclass\n";
  const fs::path base = manifest.parent_path();
  for (const auto& e : entries) {
    fs::path p = e.path;
    if (!base.empty() && p.is_absolute() == base.is_absolute()) p = p.lexically_relative(base);
    out << e.id << '\t' << p.generic_string() << '\t' << to_string(e.label) << '\n';
  }
  write_file_atomic(manifest, out.str());
}

RawDocument load_document(const ManifestEntry& entry) {
  RawDocument doc{entry.id, entry.path, read_file(entry.path), entry.label};
  if (doc.body.empty()) throw DataError("document '" + entry.id + "' is empty");
  return doc;
}

}  // namespace textnet
