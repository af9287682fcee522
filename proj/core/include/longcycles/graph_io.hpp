#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "longcycles/graph.hpp"

namespace longcycles {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

enum class GraphFormat { kEdgeList, kDimacs };

// "u v" per line, 0-indexed; '#' starts a comment line; optional "n=<k>" header.
// Without a header n is 1 + the largest id seen.
Graph parse_edge_list(std::string_view text);

// "p edge n m" followed by m lines "e u v", 1-indexed; 'c' lines are comments.
Graph parse_dimacs(std::string_view text);

// "n=<k>" header then sorted edges "u v", one per line, '\n' terminated.
std::string to_edge_list(const Graph& g);
std::string to_dimacs(const Graph& g);

Graph read_graph(const std::filesystem::path& path, GraphFormat format);
GraphFormat parse_format_name(std::string_view name);

}  // namespace longcycles
