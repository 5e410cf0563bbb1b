#pragma once

#include <stdexcept>
#include <string>

namespace shepherd {

/// Precondition violation on caller-supplied data.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Network/checkpoint shape disagreement.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// I/O failure; the message always names the offending path.
class FileError : public std::runtime_error {
 public:
  FileError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace shepherd
