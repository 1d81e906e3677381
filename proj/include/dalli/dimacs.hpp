#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dalli/graph.hpp"

namespace dalli {

/// DIMACS edge format, 1-indexed on disk:
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>        exactly m of these
///   f <u>            optional; marks u forbidden
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MissingHeader,
    MalformedHeader,
    MalformedLine,
    SelfLoop,
    DuplicateEdge,
    OutOfRange,
    EdgeCountMismatch,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

Graph parse_dimacs(std::string_view text);

/// Header, edges with u < v in sorted order, then f lines; '\n' endings.
std::string write_dimacs(const Graph& g);

}  // namespace dalli
