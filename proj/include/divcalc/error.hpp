#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divcalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked 64/128-bit operation left its range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Two classes from different lattices were combined.
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its stated domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded search cannot be carried out (box too large, bound too small,
/// lattice not suitable for a certificate).
class SearchError : public Error {
 public:
  using Error::Error;
};

/// Malformed divisor expression or input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Lookup of a surface, label, or fixture id failed.
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace divcalc
