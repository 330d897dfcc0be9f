#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fewdist {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input outside an operation's domain (empty set, zero divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A verified precondition of an auditor did not hold.  This is an input
/// problem, not a failed audit.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enumeration was refused before allocation because its projected size
/// exceeds the configured threshold.
class FeasibilityError : public Error {
 public:
  FeasibilityError(const std::string& what, std::uint64_t estimated_pairs, std::uint64_t limit)
      : Error(what + ": estimated " + std::to_string(estimated_pairs) + " pairs exceeds limit " +
              std::to_string(limit)),
        estimated_pairs_(estimated_pairs),
        limit_(limit) {}

  std::uint64_t estimated_pairs() const noexcept { return estimated_pairs_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t estimated_pairs_;
  std::uint64_t limit_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fewdist
