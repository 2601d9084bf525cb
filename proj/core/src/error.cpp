#include "misinfo/error.hpp"

#include <utility>

namespace misinfo {

namespace {

std::string with_line(const std::string& source, std::optional<std::size_t> line,
                      const std::string& what) {
  std::string msg = source;
  if (line) msg += ":" + std::to_string(*line);
  return msg + ": " + what;
}

}  // namespace

ParseError::ParseError(std::string source, std::optional<std::size_t> line,
                       const std::string& what)
    : Error(with_line(source, line, what)), source_(std::move(source)), line_(line) {}

ValidationError::ValidationError(std::string field, const std::string& what)
    : Error(field + ": " + what), field_(std::move(field)) {}

ValidationError::ValidationError(std::string field, std::string node, const std::string& what)
    : Error(field + " (node '" + node + "'): " + what),
      field_(std::move(field)),
      node_(std::move(node)) {}

LookupError::LookupError(std::string id)
    : Error("unknown node id '" + id + "'"), id_(std::move(id)) {}

IoError::IoError(std::string path, const std::string& what)
    : Error(path + ": " + what), path_(std::move(path)) {}

}  // namespace misinfo
