#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hgraph {

enum class ErrorKind {
  parse,            // malformed input file
  validation,       // representation violates its invariants
  size_cap,         // instance above an exhaustive-search cap
  degenerate_size,  // instance below the minimum size an operation supports
  chordality,       // input graph is not chordal
  connectivity,     // input graph is not connected
  type,             // wrong kind of object (non-tree base, non-bipartite, ...)
  parameter,        // bad numeric parameter
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Error(ErrorKind kind, std::string message, std::vector<std::string> detail)
      : std::runtime_error(std::move(message)), kind_(kind), detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }
  // Structured payload, e.g. the witness cycle of a chordality error.
  const std::vector<std::string>& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> detail_;
};

// Parse errors carry the offending line number for diagnostics.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, const std::string& what)
      : Error(ErrorKind::parse, file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

}  // namespace hgraph
