#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigdom/graph.hpp"

namespace sigdom {

/// Malformed input. `line()` is the 1-based input line, or 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Largest order representable in the short graph6 form.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 record (short form only). An optional ">>graph6<<"
/// prefix and trailing CR/LF are accepted.
Graph parse_graph6(std::string_view line);

/// Encodes in graph6 short form: header byte 63+n, then the upper triangle in
/// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte.
std::string write_graph6(const Graph& g);

/// Parses "n" followed by whitespace-separated "u v" pairs.
Graph parse_edge_list(std::string_view text);

enum class GraphFormat { graph6, edge_list };

/// A single-consumer sequence of graphs, pulled one at a time.
///
/// Stream sources report malformed records as ParseError carrying the input
/// line; nothing is skipped silently. Blank lines separate edge-list records
/// and are ignored between graph6 records.
class GraphStream {
 public:
  using Producer = std::function<std::optional<Graph>()>;

  explicit GraphStream(Producer producer, std::shared_ptr<std::size_t> record_line = nullptr)
      : producer_(std::move(producer)), record_line_(std::move(record_line)) {}

  static GraphStream from_istream(std::istream& in, GraphFormat format);
  static GraphStream from_graphs(std::vector<Graph> graphs);
  /// Concatenates streams in order.
  static GraphStream chain(std::vector<GraphStream> parts);

  std::optional<Graph> next();

  /// Number of graphs yielded so far.
  std::size_t count() const { return count_; }

  /// Input line where the most recently yielded record started; 0 for
  /// sources that are not text.
  std::size_t line() const { return record_line_ ? *record_line_ : 0; }

  std::vector<Graph> collect();

 private:
  Producer producer_;
  std::shared_ptr<std::size_t> record_line_;
  std::size_t count_ = 0;
};

}  // namespace sigdom
