#include "longcycles/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace longcycles {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view token) {
  long long value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Calls fn(line_number, trimmed_line) for each line of text.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t stop = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    fn(line_no, trim(text.substr(pos, stop - pos)));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

Graph build(int n, const std::vector<Edge>& edges, int line) {
  try {
    return Graph(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> header_n;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  int max_id = -1;
  int last_line = 0;

  for_each_line(text, [&](int line_no, std::string_view line) {
    last_line = line_no;
    if (line.empty() || line.front() == '#') return;
    if (line.rfind("n=", 0) == 0) {
      if (header_n) throw ParseError(line_no, "duplicate n= header");
      const auto value = to_int(trim(line.substr(2)));
      if (!value || *value < 0 || *value > Graph::kMaxOrder) {
        throw ParseError(line_no, "malformed n= header");
      }
      header_n = static_cast<int>(*value);
      return;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(line_no, "expected \"u v\"");
    const auto u = to_int(tokens[0]);
    const auto v = to_int(tokens[1]);
    if (!u || !v || *u < 0 || *v < 0) throw ParseError(line_no, "expected two non-negative integers");
    if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    if (*u >= Graph::kMaxOrder || *v >= Graph::kMaxOrder) {
      throw ParseError(line_no, "vertex id exceeds the supported maximum");
    }
    edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
    edge_lines.push_back(line_no);
    max_id = std::max<int>(max_id, static_cast<int>(std::max(*u, *v)));
  });

  const int n = header_n.value_or(max_id + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u >= n || edges[i].v >= n) {
      throw ParseError(edge_lines[i], "vertex id out of range for n=" + std::to_string(n));
    }
  }
  return build(n, edges, last_line);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<int> n;
  long long declared_m = 0;
  std::vector<Edge> edges;
  int last_line = 0;

  for_each_line(text, [&](int line_no, std::string_view line) {
    last_line = line_no;
    if (line.empty() || line.front() == 'c') return;
    const auto tokens = split_ws(line);
    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4) throw ParseError(line_no, "expected \"p edge n m\"");
      if (tokens[1] != "edge" && tokens[1] != "col") throw ParseError(line_no, "unsupported problem type");
      const auto nv = to_int(tokens[2]);
      const auto mv = to_int(tokens[3]);
      if (!nv || !mv || *nv < 0 || *mv < 0) throw ParseError(line_no, "malformed problem line");
      if (*nv > Graph::kMaxOrder) throw ParseError(line_no, "vertex count exceeds the supported maximum");
      n = static_cast<int>(*nv);
      declared_m = *mv;
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError(line_no, "edge line before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected \"e u v\"");
      const auto u = to_int(tokens[1]);
      const auto v = to_int(tokens[2]);
      if (!u || !v) throw ParseError(line_no, "malformed edge line");
      if (*u < 1 || *u > *n || *v < 1 || *v > *n) throw ParseError(line_no, "vertex out of range");
      if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
      edges.push_back({static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1)});
      return;
    }
    throw ParseError(line_no, "unrecognized line");
  });

  if (!n) throw ParseError(last_line, "missing problem line");
  if (static_cast<long long>(edges.size()) != declared_m) {
    throw ParseError(last_line, "edge count mismatch: declared " + std::to_string(declared_m) +
                                    ", found " + std::to_string(edges.size()));
  }
  return build(*n, edges, last_line);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  throw std::invalid_argument("unknown graph format: " + std::string(name));
}

}  // namespace longcycles
