#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bohr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class AntisymmetryViolation : public Error {
 public:
  using Error::Error;
};

class NotDirected : public Error {
 public:
  using Error::Error;
};

class InvalidCover : public Error {
 public:
  using Error::Error;
};

class InvalidPresheaf : public Error {
 public:
  using Error::Error;
};

class NotSubpresheaf : public Error {
 public:
  using Error::Error;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// Two blocks disagree about an element they both contain.
class InconsistentIdentification : public InvalidModel {
 public:
  using InvalidModel::InvalidModel;
};

class ElementNotInContext : public Error {
 public:
  using Error::Error;
};

class RequiresBlockRepresentation : public Error {
 public:
  using Error::Error;
};

/// An enumeration produced more results than the caller allowed.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(std::size_t limit)
      : Error("enumeration exceeded limit of " + std::to_string(limit) + " results"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bohr
