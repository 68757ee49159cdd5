#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace textnet {

enum class Label : unsigned char { real = 0, fake = 1 };

inline constexpr std::size_t kNumLabels = 2;

std::string_view to_string(Label label) noexcept;
/// Accepts "real" or "fake"; throws DataError otherwise.
Label parse_label(std::string_view text);

struct RawDocument {
  std::string id;
  std::filesystem::path source_path;
  std::string body;
  std::optional<Label> declared_class;
};

/// Lemmas in original text order, stopwords removed.
struct TokenStream {
  std::string doc_id;
  std::vector<std::string> lemmas;
};

/// One manifest record: "id<TAB>path<TAB>class". Relative paths resolve
/// against the manifest's directory.
struct ManifestEntry {
  std::string id;
  std::filesystem::path path;
  Label label;
};

/// Parses a manifest. Blank lines and lines starting with '#' are skipped.
/// Duplicate ids and malformed records raise DataError.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);
void write_manifest(const std::filesystem::path& manifest,
                    const std::vector<ManifestEntry>& entries);

/// Loads the document body. Empty files raise DataError.
RawDocument load_document(const ManifestEntry& entry);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace textnet
