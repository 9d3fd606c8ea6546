#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace baxter {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is the 0-based byte offset of the bad token.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A letter outside {1, ..., n}, or a word whose rank does not match.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A statistic or operation called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operation needs a rank the construction does not support.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Search space exceeds the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Tropical arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace baxter
