#pragma once

#include <stdexcept>
#include <string>

namespace polyinv {

enum class ErrorCode {
  InvalidArgument,
  Dimension,
  Parse,
  NotInvertible,
  NotInvariant,
  NotClosed,
  ZeroEigenvalue,
  UndefinedResultant,
  UnsupportedSymbolic,
  Numerical,
  InvalidStart,
  InconclusivePowerClosure,
  Unsupported,
  NonCommuting,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Base exception of the library. Every failure carries a machine-readable
/// code so the C API can map it to a status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position) +
                                    (expected.empty() ? "" : " (expected " + expected + ")")),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Raised when an operator maps a basis element outside the space.
class NotInvariantError : public Error {
 public:
  NotInvariantError(std::string op, std::size_t basis_index, std::string element,
                    std::string residual)
      : Error(ErrorCode::NotInvariant,
              "space not invariant under " + op + ": image of basis element " +
                  std::to_string(basis_index) + " (" + element + ") leaves the span, residual " +
                  residual),
        op_(std::move(op)),
        basis_index_(basis_index),
        element_(std::move(element)),
        residual_(std::move(residual)) {}

  const std::string& op() const noexcept { return op_; }
  std::size_t basis_index() const noexcept { return basis_index_; }
  const std::string& element() const noexcept { return element_; }
  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string op_;
  std::size_t basis_index_;
  std::string element_;
  std::string residual_;
};

class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(ErrorCode::Numerical, what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace polyinv
