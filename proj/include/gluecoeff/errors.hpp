#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gluecoeff {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GuardViolation : public Error {
 public:
  using Error::Error;
};

class SumMismatch : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

class NotSupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gluecoeff
