#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gabriel {

enum class ErrorKind {
  invalid_argument,
  cycle_in_covers,
  not_a_lattice,
  no_bounded_structure,
  not_modular,
  not_basic,
  too_large,
  syntax_error,
  unknown_element,
  duplicate_element,
  out_of_bounds,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::cycle_in_covers: return "CycleInCovers";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::no_bounded_structure: return "NoBoundedStructure";
    case ErrorKind::not_modular: return "NotModular";
    case ErrorKind::not_basic: return "NotBasic";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::duplicate_element: return "DuplicateElement";
    case ErrorKind::out_of_bounds: return "OutOfBounds";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness` carries the offending
/// elements where the kind has one (a pair lacking a join, a non-modular
/// triple); `line`/`column` are 1-based and zero when not from a document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> witness = {}, std::size_t line = 0,
        std::size_t column = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message),
        witness_(std::move(witness)),
        line_(line),
        column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::vector<std::size_t> witness_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gabriel
