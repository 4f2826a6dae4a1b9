#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqlift {

enum class ErrorKind {
  invalid_order,
  label,
  consistency,
  parse,
  invariant,
  capacity,
  domain,
  matrix_domain,
  orbit_length,
  not_special_orthogonal,
  witness,
  degenerate_signature,
  construction,
  inconsistency,
  io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqlift
