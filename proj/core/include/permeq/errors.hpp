#ifndef PERMEQ_ERRORS_HPP
#define PERMEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace permeq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Malformed cycle notation. Line and column are one-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A criterion-based solver was asked to run outside its hypotheses.
class HypothesesFailed : public Error {
 public:
  using Error::Error;
};

/// q(e, w) could not be pinned down far enough to decide a hypothesis.
class QUndecided : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public Error {
 public:
  DegreeTooLarge(std::size_t n, std::size_t max_n)
      : Error("degree " + std::to_string(n) +
              " exceeds the exhaustive search limit " + std::to_string(max_n)) {}
};

class NotASolution : public Error {
 public:
  using Error::Error;
};

class NoSuchCycleLength : public Error {
 public:
  using Error::Error;
};

}  // namespace permeq

#endif  // PERMEQ_ERRORS_HPP
