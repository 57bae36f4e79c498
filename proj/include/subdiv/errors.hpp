#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subdiv {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, pattern or witness text. Carries the 1-based line and
/// the 0-based byte offset into the input where the problem was detected.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line, std::size_t offset)
      : Error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + what),
        line_(line), offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t line_;
  std::size_t offset_;
};

/// Arguments outside an operation's domain (bad parameters, anchors that are
/// not edges, edgeless patterns in edge mode, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// An exponential operation was asked to run past a configured size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A subdivision witness failed validation where a valid one was required.
class InvalidWitness : public Error {
public:
  using Error::Error;
};

} // namespace subdiv
