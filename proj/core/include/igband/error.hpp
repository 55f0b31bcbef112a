#ifndef IGBAND_ERROR_HPP
#define IGBAND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace igband {

// Base class for all errors raised by the library.  Precondition violations
// and malformed inputs throw; conditions that are legitimate outcomes of a
// computation (enumeration overflow, failed verification) are returned as
// values instead.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string const& msg) : std::runtime_error(msg) {}
};

// Raised by the presentation parser; carries the 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string const& msg)
      : Error("line " + std::to_string(line) + ", column "
              + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}

  int line;
  int column;
};

}  // namespace igband

#endif  // IGBAND_ERROR_HPP
