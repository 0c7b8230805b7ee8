#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace maglap {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data: non-finite entries, negative weights, non-Hermitian input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A parameter outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The eigensolver failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Rows of an adjacency matrix with no outgoing mass.
class SinkError : public Error {
 public:
  SinkError(const std::string& what, std::vector<std::size_t> rows)
      : Error(what), rows_(std::move(rows)) {}
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }

 private:
  std::vector<std::size_t> rows_;
};

/// Power iteration ran out of iterations.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual, long iterations)
      : Error(what), residual_(residual), iterations_(iterations) {}
  double residual() const noexcept { return residual_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  long iterations_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace maglap
