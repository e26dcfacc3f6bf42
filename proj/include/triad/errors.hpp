#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace triad {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File missing, unreadable, or a corrupt binary container.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Violated precondition or out-of-domain parameter.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Triangle sampling exhausted its wedge budget without a single closed wedge.
class InsufficientClosureError : public Error {
 public:
  explicit InsufficientClosureError(std::uint64_t wedges_drawn)
      : Error("no closed wedge in " + std::to_string(wedges_drawn) +
              " wedge draws"),
        wedges_drawn_(wedges_drawn) {}

  std::uint64_t wedges_drawn() const { return wedges_drawn_; }

 private:
  std::uint64_t wedges_drawn_;
};

}  // namespace triad
