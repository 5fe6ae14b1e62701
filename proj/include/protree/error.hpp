#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace protree {

/// Malformed tree text; `offset` is the byte position of the first bad character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An argument outside the operation's domain (l = 0, k < 2, unary vertex where
/// a proper binary tree is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A rewrite whose hypotheses do not hold for the given tree and context.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request exceeds a size guard (enumeration limits, builder limits).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace protree
