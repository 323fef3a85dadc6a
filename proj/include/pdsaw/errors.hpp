#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pdsaw {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed canonical text. `position` is a 0-based byte offset into the line.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// An object failed the validity rules of its kind.
struct ValidationError : Error {
  explicit ValidationError(std::vector<std::string> v)
      : Error(join(v)), violations(std::move(v)) {}
  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "validation failed:";
    for (const auto& item : v) s += " [" + item + "]";
    return s;
  }
};

// An enumeration or brute-force sweep would exceed the configured object cap.
struct ResourceCapError : Error { using Error::Error; };

// Exact polynomial division left a remainder.
struct InexactDivisionError : Error { using Error::Error; };

// An internal invariant failed; indicates a bug or unchecked invalid input.
struct InternalError : Error { using Error::Error; };

// Operation undefined for the given object (e.g. last descent of an empty walk).
struct DomainError : Error { using Error::Error; };

}  // namespace pdsaw
