#pragma once

#include <stdexcept>
#include <string>

namespace textnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Misconfiguration: bad paths, malformed config, unusable lexicon or grammar.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a precondition (too short, single class, non-finite).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace textnet
