#ifndef RIESZ_ERRORS_HPP
#define RIESZ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace riesz {

// Every library failure derives from Error and carries a stable code string.
// The CLI prints the code verbatim, so the strings below are part of the
// public interface:
//
//   domain_error              argument outside the mathematical domain
//   unsupported_parameter     no closed form is available for this input
//   degenerate_configuration  coincident points
//   resource_limit            support enumeration would blow up
//   search_failure            optimizer never produced a feasible evaluation
//   parse_error               malformed point file
//   io_error                  file could not be opened or written
class Error : public std::runtime_error {
public:
  Error(std::string_view code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

class UnsupportedParameter : public Error {
public:
  explicit UnsupportedParameter(const std::string& what)
      : Error("unsupported_parameter", what) {}
};

class DegenerateConfiguration : public Error {
public:
  explicit DegenerateConfiguration(const std::string& what)
      : Error("degenerate_configuration", what) {}
};

class ResourceLimit : public Error {
public:
  explicit ResourceLimit(const std::string& what)
      : Error("resource_limit", what) {}
};

class SearchFailure : public Error {
public:
  explicit SearchFailure(const std::string& what)
      : Error("search_failure", what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error("io_error", what) {}
};

}  // namespace riesz

#endif  // RIESZ_ERRORS_HPP
