#ifndef ARS_ERRORS_HPP
#define ARS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ars {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// The bracket flag stabilised (or the depth bound ran out) below full rank.
class RankConditionFailure : public Error {
public:
  using Error::Error;
};

class NotPrivileged : public Error {
public:
  using Error::Error;
};

class DegenerateApproximation : public Error {
public:
  using Error::Error;
};

/// A bracket produced a component above the admissible polynomial degree.
class DegreeBoundExceeded : public Error {
public:
  using Error::Error;
};

class NotInvariant : public Error {
public:
  using Error::Error;
};

class GradedFrameUnavailable : public Error {
public:
  using Error::Error;
};

class NotOnZ1 : public Error {
public:
  using Error::Error;
};

class DegenerateZ1 : public Error {
public:
  using Error::Error;
};

class NonTriangularField : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

} // namespace ars

#endif
