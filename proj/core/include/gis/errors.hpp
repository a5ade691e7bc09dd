#ifndef GIS_ERRORS_HPP_
#define GIS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gis {

/// Base class for every error reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the graph, element and word readers. Carries the 1-based
/// line number of the offending declaration (0 for single-line inputs).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string const& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  explicit ParseError(std::string const& msg) : Error(msg), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gis

#endif  // GIS_ERRORS_HPP_
