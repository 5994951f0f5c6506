#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace dqg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Block dimensions or shapes of two operands disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class UnknownBlockError : public Error {
 public:
  using Error::Error;
};

// A tail rule left the representable family (or is not defined on this shape).
class UnsupportedTailError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Inconsistent model data: dimension counts, intertwiners, antipode pairing,
// missing invariant functionals.
class ModelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t column, std::set<std::string> expected, const std::string& what)
      : Error(what), column_(column), expected_(std::move(expected)) {}

  std::size_t column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t column_;
  std::set<std::string> expected_;
};

// Raised when an internal consistency check that the theory guarantees fails.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dqg
