#pragma once

#include <stdexcept>
#include <string>

namespace stabring {

enum class ErrorKind {
  parse,       // malformed input text
  validation,  // well-formed but violates a graph/vector invariant
  argument,    // bad argument to an operation (wrong color, bad pair, ...)
  limit,       // desk-scale limit exceeded (n > 64, too many stable sets, ...)
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stabring
