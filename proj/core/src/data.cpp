#include "textnet/data.hpp"

#include <cstdlib>

#ifndef TEXTNET_DATA_DIR
#define TEXTNET_DATA_DIR "data"
#endif

namespace textnet {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TEXTNET_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return TEXTNET_DATA_DIR;
}

}  // namespace textnet
