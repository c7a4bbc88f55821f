#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

enum class ErrorCode {
  SyntaxError,
  NotPrime,
  ZeroExponent,
  TooLarge,
  TooMany,
  NoWitness,
  PreconditionFailed,
  BadParameters,
};

const char *to_string(ErrorCode code);

/// Every failure reported by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failures also remember the byte offset in the input.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, std::size_t position, const std::string &what)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace sgb
