#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minquot {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A generator index outside the declared rank, or operands of different
  // rank.
  class RankError : public Error {
   public:
    using Error::Error;
  };

  // A caller broke an operation's precondition (i == j, all-ones indicator,
  // modulus < 2, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position_(pos) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  // The operation is well defined but this library will not decide it, e.g.
  // inverting an endomorphism that carries no certificate.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  // A search would exceed its configured work bound.
  class RefusedError : public Error {
   public:
    using Error::Error;
  };

}  // namespace minquot
