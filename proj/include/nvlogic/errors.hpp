#pragma once

#include <stdexcept>
#include <string>

namespace nvl {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// --- value construction ---
class OutOfRange : public Error {
public:
  using Error::Error;
};
class LengthMismatch : public Error {
public:
  using Error::Error;
};
class InvalidSignature : public Error {
public:
  using Error::Error;
};
class ZeroMass : public Error {
public:
  using Error::Error;
};
class InvalidGroups : public Error {
public:
  using Error::Error;
};

// --- connectives ---
class SignatureMismatch : public Error {
public:
  using Error::Error;
};
class InvalidOrder : public Error {
public:
  using Error::Error;
};
class IntervalUnsupported : public Error {
public:
  using Error::Error;
};
class AsymmetricSignature : public Error {
public:
  using Error::Error;
};

// --- symbolic logics ---
class BadSymbol : public Error {
public:
  using Error::Error;
};
class BadSize : public Error {
public:
  using Error::Error;
};
class Duplicate : public Error {
public:
  using Error::Error;
};
class TableError : public Error {
public:
  using Error::Error;
};

// --- parsing and evaluation ---

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  /// The description alone, without the position prefix.
  const std::string& message() const { return message_; }

private:
  int line_;
  int column_;
  std::string message_;
};

class UnknownLiteral : public Error {
public:
  using Error::Error;
};
class UnboundVariable : public Error {
public:
  using Error::Error;
};
class UnsupportedNot : public Error {
public:
  using Error::Error;
};
class InfiniteDomain : public Error {
public:
  using Error::Error;
};

}  // namespace nvl
