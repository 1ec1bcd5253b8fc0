#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holonomy {

  // Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A precondition on the arguments was not met (degree mismatch, a
  // singleton passed where tiles are requested, an out-of-range index, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // An internal consistency check failed. Seeing one of these means a bug in
  // the library or a corrupted structure, never bad user input.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  // An enumeration ran past its configured element budget.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what_was_enumerated, std::size_t cap)
        : Error(what_was_enumerated + " exceeded the budget of "
                + std::to_string(cap) + " elements"),
          cap_(cap) {}

    [[nodiscard]] std::size_t cap() const noexcept {
      return cap_;
    }

   private:
    std::size_t cap_;
  };

  // Malformed input document. The message carries line/field diagnostics.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace holonomy
