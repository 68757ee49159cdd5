#pragma once

#include <filesystem>

namespace textnet {

/// Root of the bundled data (lexicon, grammar, corpora). The TEXTNET_DATA_DIR
/// environment variable overrides the location baked in at build time.
std::filesystem::path data_dir();

}  // namespace textnet
