#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamplighter {

// Malformed external input (text forms, walk files, probe placement).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  explicit InputError(const std::string& what)
      : std::runtime_error(what), position_(std::string::npos) {}

  // Byte offset or element index of the offending token; npos when not applicable.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured size cap (ball members, radius, stage enumeration) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lamplighter
