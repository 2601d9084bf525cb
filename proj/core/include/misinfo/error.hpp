#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace misinfo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (CSV or JSON). Carries the 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::optional<std::size_t> line, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  std::string source_;
  std::optional<std::size_t> line_;
};

/// A value violates a documented invariant or range.
///
/// `field` names the offending field (e.g. "weights", "nodes.lambda0") and
/// `node` the node id it belongs to, when there is one.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what);
  ValidationError(std::string field, std::string node, const std::string& what);

  const std::string& field() const noexcept { return field_; }
  const std::optional<std::string>& node() const noexcept { return node_; }

 private:
  std::string field_;
  std::optional<std::string> node_;
};

/// Unknown node id.
class LookupError : public Error {
 public:
  explicit LookupError(std::string id);

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Arguments that are individually valid but not allowed together (i == j).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Failure to read or write a file.
class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what);

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace misinfo
