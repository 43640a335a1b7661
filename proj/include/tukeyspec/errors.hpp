#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tukeyspec {

// Malformed input text; pos is a byte offset into the source string.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos_)
      : std::runtime_error(what), pos(pos_) {}
  std::size_t pos;
};

// A structurally valid value violating an operation's contract.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tukeyspec
