#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilfer {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The result would exceed the range of double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A Gamma function argument hit a pole (non-positive value).
class GammaPoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The boundary determinant vanishes, so the integral representation does not exist.
class DegenerateProblem : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text. `offset` is the byte position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::vector<std::string> expected = {})
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A name that is neither a variable nor a known function.
class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t offset)
      : ParseError("unknown identifier '" + name + "' at offset " + std::to_string(offset), offset),
        name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Expression evaluation failed; carries the point of evaluation.
class EvalError : public Error {
 public:
  EvalError(const std::string& what, double t, double x)
      : Error(what + " at (t=" + std::to_string(t) + ", x=" + std::to_string(x) + ")"), t_(t), x_(x) {}

  double t() const noexcept { return t_; }
  double x() const noexcept { return x_; }

 private:
  double t_;
  double x_;
};

/// Picard iteration failed to contract. Carries the successive-difference history.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, std::vector<double> diff_history)
      : Error(what), diff_history_(std::move(diff_history)) {}

  const std::vector<double>& diff_history() const noexcept { return diff_history_; }

 private:
  std::vector<double> diff_history_;
};

/// Problem file or command-line input rejected.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hilfer
