#pragma once

#include <stdexcept>
#include <string>

namespace simplicia {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments to a constructor or operation (empty facet list, bad vertex, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A precondition on the shape of the complex failed (not pure, not a pseudomanifold, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A stored property disagrees with its recomputation.
class CacheMismatch : public Error {
 public:
  using Error::Error;
};

/// A bistellar move was requested that is not valid on the complex.
class MoveNotApplicable : public Error {
 public:
  MoveNotApplicable() : Error("move not applicable") {}
};

/// Malformed on-disk document. `where` names the offending field or line.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

class SchemaVersionError : public Error {
 public:
  SchemaVersionError(int found, int expected)
      : Error("unsupported schema_version " + std::to_string(found) + " (expected " +
              std::to_string(expected) + ")"),
        found_(found) {}
  int found() const noexcept { return found_; }

 private:
  int found_;
};

/// Blowup requested at a vertex whose singularity is not an ordinary double point.
class UnsupportedSingularity : public Error {
 public:
  UnsupportedSingularity() : Error("unsupported singularity type") {}
};

/// The block boundary could not be matched to the vertex link within budget.
class BoundaryMatchError : public Error {
 public:
  BoundaryMatchError() : Error("boundaries could not be mapped") {}
};

}  // namespace simplicia
