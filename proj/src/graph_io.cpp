#include "sigdom/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <memory>
#include <sstream>

namespace sigdom {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  constexpr std::string_view prefix = ">>graph6<<";
  if (line.starts_with(prefix)) line.remove_prefix(prefix.size());
  if (line.empty()) throw ParseError("graph6: empty record");
  for (char c : line)
    if (c < 63 || c > 126)
      throw ParseError("graph6: character " + std::to_string(static_cast<int>(c)) +
                       " outside 63..126");
  if (line[0] == 126) throw ParseError("graph6: long form (n > 62) is not supported");

  const int n = line[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::string_view payload = line.substr(1);
  if (payload.size() < bytes)
    throw ParseError("graph6: truncated payload, expected " + std::to_string(bytes) +
                     " bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(payload.size()));
  if (payload.size() > bytes)
    throw ParseError("graph6: " + std::to_string(payload.size() - bytes) +
                     " trailing bytes after payload");

  std::vector<Graph::Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = payload[k / 6] - 63;
      if (group & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw PreconditionError("graph6 short form supports n <= 62, got n=" + std::to_string(n));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, char{63});
  out[0] = static_cast<char>(63 + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc{} || ptr != text.data() + end)
      throw ParseError("edge list: bad token '" + std::string(text.substr(pos, end - pos)) + "'");
    tokens.push_back(value);
    pos = end;
  }
  if (tokens.empty()) throw ParseError("edge list: missing vertex count");
  if (tokens[0] < 0 || tokens[0] > kMaxVertices)
    throw ParseError("edge list: vertex count " + std::to_string(tokens[0]) + " out of range");
  if (tokens.size() % 2 == 0) throw ParseError("edge list: odd number of endpoints");

  const int n = static_cast<int>(tokens[0]);
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
    const long long u = tokens[i], v = tokens[i + 1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: vertex index out of range in edge " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph(n, edges);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

GraphStream GraphStream::from_istream(std::istream& in, GraphFormat format) {
  auto line_no = std::make_shared<std::size_t>(0);
  auto record_line = std::make_shared<std::size_t>(0);
  if (format == GraphFormat::graph6) {
    return GraphStream([&in, line_no, record_line]() -> std::optional<Graph> {
      std::string line;
      while (std::getline(in, line)) {
        ++*line_no;
        if (is_blank(line)) continue;
        *record_line = *line_no;
        try {
          return parse_graph6(line);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), *line_no);
        } catch (const PreconditionError& e) {
          throw ParseError(e.what(), *line_no);
        }
      }
      return std::nullopt;
    }, record_line);
  }
  return GraphStream([&in, line_no, record_line]() -> std::optional<Graph> {
    std::string line, record;
    std::size_t first = 0;
    while (std::getline(in, line)) {
      ++*line_no;
      if (is_blank(line)) {
        if (first) break;
        continue;
      }
      if (!first) first = *line_no;
      record += line;
      record += '\n';
    }
    if (!first) return std::nullopt;
    *record_line = first;
    try {
      return parse_edge_list(record);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), first);
    }
  }, record_line);
}

GraphStream GraphStream::from_graphs(std::vector<Graph> graphs) {
  auto items = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto index = std::make_shared<std::size_t>(0);
  return GraphStream([items, index]() -> std::optional<Graph> {
    if (*index >= items->size()) return std::nullopt;
    return (*items)[(*index)++];
  });
}

GraphStream GraphStream::chain(std::vector<GraphStream> parts) {
  auto streams = std::make_shared<std::vector<GraphStream>>(std::move(parts));
  auto current = std::make_shared<std::size_t>(0);
  return GraphStream([streams, current]() -> std::optional<Graph> {
    while (*current < streams->size()) {
      if (auto g = (*streams)[*current].next()) return g;
      ++*current;
    }
    return std::nullopt;
  });
}

std::optional<Graph> GraphStream::next() {
  auto g = producer_();
  if (g) ++count_;
  return g;
}

std::vector<Graph> GraphStream::collect() {
  std::vector<Graph> out;
  while (auto g = next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace sigdom
