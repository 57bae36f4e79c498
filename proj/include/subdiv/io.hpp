#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/graph.hpp"

namespace subdiv {

enum class GraphFormat { edge_list, graph6 };

/// Largest order accepted from text input.
inline constexpr int kMaxParsedOrder = 1 << 14;

namespace detail {

struct Line {
  std::string_view text;
  std::size_t number = 0; // 1-based
  std::size_t offset = 0; // byte offset of the line start
};

/// Non-blank lines that are not '#' comments.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({line, number, pos});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Splits a line into whitespace-separated integer tokens; throws on junk.
inline std::vector<long long> int_tokens(const Line &line) {
  std::vector<long long> out;
  std::size_t i = 0;
  const auto &t = line.text;
  while (i < t.size()) {
    if (t[i] == ' ' || t[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < t.size() && t[j] != ' ' && t[j] != '\t') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.data() + i, t.data() + j, value);
    if (ec != std::errc{} || ptr != t.data() + j)
      throw ParseError("expected an integer, got '" + std::string(t.substr(i, j - i)) + "'", line.number,
                       line.offset + i);
    out.push_back(value);
    i = j;
  }
  return out;
}

inline Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header line \"n m\"", 1, 0);
  const auto header = int_tokens(lines[0]);
  if (header.size() != 2) throw ParseError("header must be \"n m\"", lines[0].number, lines[0].offset);
  const long long n = header[0];
  const long long m = header[1];
  if (n < 0 || m < 0) throw ParseError("negative count in header", lines[0].number, lines[0].offset);
  if (n > kMaxParsedOrder) throw ParseError("vertex count exceeds " + std::to_string(kMaxParsedOrder), lines[0].number, lines[0].offset);
  if (m > n * (n - 1) / 2) throw ParseError("edge count exceeds n(n-1)/2", lines[0].number, lines[0].offset);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow",
                     lines.back().number, lines.back().offset);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = int_tokens(lines[i]);
    if (tok.size() != 2) throw ParseError("edge line must be \"u v\"", lines[i].number, lines[i].offset);
    if (tok[0] < 0 || tok[1] < 0 || tok[0] >= n || tok[1] >= n)
      throw ParseError("vertex index out of range", lines[i].number, lines[i].offset);
    if (tok[0] == tok[1]) throw ParseError("self-loop", lines[i].number, lines[i].offset);
    const Edge e(static_cast<int>(tok[0]), static_cast<int>(tok[1]));
    if (!seen.insert(e).second) throw ParseError("duplicate edge", lines[i].number, lines[i].offset);
    edges.push_back(e);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph parse_graph6(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 1) throw ParseError("graph6 input must hold exactly one graph", lines.empty() ? 1 : lines[1].number, 0);
  const Line &line = lines[0];
  std::string_view s = line.text;
  std::size_t base = 0;
  if (s.starts_with(">>graph6<<")) {
    s.remove_prefix(10);
    base = 10;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= s.size()) throw ParseError("truncated graph6 string", line.number, line.offset + base + pos);
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", line.number, line.offset + base + pos);
    ++pos;
    return c - 63;
  };
  long long n = take();
  if (n == 63) {
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
  }
  if (n > kMaxParsedOrder) throw ParseError("vertex count exceeds " + std::to_string(kMaxParsedOrder), line.number, line.offset + base);
  std::vector<Edge> edges;
  int chunk = 0;
  int remaining = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (remaining == 0) {
        chunk = take();
        remaining = 6;
      }
      --remaining;
      if ((chunk >> remaining) & 1) edges.emplace_back(u, v);
    }
  if (remaining > 0 && (chunk & ((1 << remaining) - 1)) != 0)
    throw ParseError("nonzero padding bits", line.number, line.offset + base + pos - 1);
  if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", line.number, line.offset + base + pos);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string comment_block(std::string_view header) {
  std::string out;
  std::size_t pos = 0;
  while (pos < header.size()) {
    std::size_t end = header.find('\n', pos);
    if (end == std::string_view::npos) end = header.size();
    out += "# ";
    out += header.substr(pos, end - pos);
    out += '\n';
    pos = end + 1;
  }
  return out;
}

} // namespace detail

/// Parses edge-list or graph6 text. Lines starting with '#' are comments.
inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edge_list ? detail::parse_edge_list(text) : detail::parse_graph6(text);
}

/// graph6 when the first content line is a single token, edge list otherwise.
inline GraphFormat detect_format(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) return GraphFormat::edge_list;
  const auto t = lines[0].text;
  const auto first = t.find_first_not_of(" \t");
  const auto gap = t.find_first_of(" \t", first);
  const bool one_token = gap == std::string_view::npos || t.find_first_not_of(" \t", gap) == std::string_view::npos;
  return one_token ? GraphFormat::graph6 : GraphFormat::edge_list;
}

inline Graph parse_graph(std::string_view text) { return parse_graph(text, detect_format(text)); }

inline std::string to_graph6(const Graph &g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

/// Serialises g; each line of `header` becomes a leading "# " comment.
inline std::string serialize_graph(const Graph &g, GraphFormat format, std::string_view header = {}) {
  std::string out = detail::comment_block(header);
  if (format == GraphFormat::graph6) {
    out += to_graph6(g);
    out += '\n';
    return out;
  }
  out += std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge &e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

} // namespace subdiv
