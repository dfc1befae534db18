#pragma once

#include <stdexcept>
#include <string>

namespace smonkit {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SMONKIT_DEFINE_ERROR(Name)           \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  };

SMONKIT_DEFINE_ERROR(AmbientMismatch)
SMONKIT_DEFINE_ERROR(PrimeMismatch)
SMONKIT_DEFINE_ERROR(ShapeMismatch)
SMONKIT_DEFINE_ERROR(NotAdmissible)
SMONKIT_DEFINE_ERROR(UnknownArrow)
SMONKIT_DEFINE_ERROR(Cyclic)
SMONKIT_DEFINE_ERROR(AlgebraMismatch)
SMONKIT_DEFINE_ERROR(NotSource)
SMONKIT_DEFINE_ERROR(NotNakayama)
SMONKIT_DEFINE_ERROR(SmonRequired)
SMONKIT_DEFINE_ERROR(InvalidModule)
SMONKIT_DEFINE_ERROR(LimitExceeded)

#undef SMONKIT_DEFINE_ERROR

// Parse failure with a 1-based source position and an optional file name.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 1, const std::string& source = "")
      : Error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what),
        source_(source),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace smonkit
