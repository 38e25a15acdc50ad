#include "throttlekit/io.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace throttle {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto id_of = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = lines[ln];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      id_of(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(ln + 1, "expected \"u v\", got " + std::to_string(tokens.size()) + " tokens");
    if (tokens[0] == tokens[1]) throw ParseError(ln + 1, "self-loop at vertex " + std::string(tokens[0]));
    Vertex u = id_of(tokens[0]);
    Vertex v = id_of(tokens[1]);
    edges.emplace_back(u, v);
  }
  const auto n = static_cast<Vertex>(labels.size());
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph decode_graph6(std::string_view line, std::size_t ln) {
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError(ln, "empty graph6 string");
  if (line[0] == ':' || line[0] == '&') throw ParseError(ln, "sparse6/digraph6 input is not graph6");
  for (char ch : line)
    if (ch < 63 || ch > 126) throw ParseError(ln, "invalid graph6 character");
  std::size_t pos = 0;
  auto take6 = [&](int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= line.size()) throw ParseError(ln, "truncated graph6 header");
      value = (value << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
    }
    return value;
  };
  std::uint64_t n = 0;
  if (line[0] != 126) {
    n = take6(1);
  } else if (line.size() > 1 && line[1] != 126) {
    ++pos;
    n = take6(3);
    if (n < 63) throw ParseError(ln, "bad graph6 header: non-canonical length encoding");
  } else {
    pos += 2;
    n = take6(6);
    if (n < 258048) throw ParseError(ln, "bad graph6 header: non-canonical length encoding");
  }
  if (n > 1'000'000) throw ParseError(ln, "graph6 order too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (line.size() - pos != expected)
    throw ParseError(ln, "bad graph6 body: expected " + std::to_string(expected) + " bytes, got " +
                             std::to_string(line.size() - pos));
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  for (; k % 6 != 0; ++k) {
    int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
    if ((byte >> (5 - static_cast<int>(k % 6))) & 1) throw ParseError(ln, "bad graph6 body: nonzero padding");
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln)
    if (!lines[ln].empty()) return decode_graph6(lines[ln], ln + 1);
  throw ParseError(1, "no graph6 line found");
}

std::vector<Graph> parse_graph6_all(std::string_view text) {
  std::vector<Graph> out;
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln)
    if (!lines[ln].empty()) out.push_back(decode_graph6(lines[ln], ln + 1));
  return out;
}

std::string emit_edge_list(const Graph& g) {
  auto edges = g.edges();
  // Ids are assigned by first appearance, so declare vertices up front
  // whenever the edge order alone would permute them.
  bool in_order = true;
  Vertex next = 0;
  for (auto [u, v] : edges) {
    for (Vertex w : {u, v}) {
      if (w == next) ++next;
      else if (w > next) in_order = false;
    }
  }
  if (next != g.order()) in_order = false;
  std::ostringstream out;
  if (!in_order)
    for (Vertex v = 0; v < g.order(); ++v) out << v << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  auto put6 = [&](std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put6(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put6(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put6(n, 6);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string emit_dot(const Graph& g, const std::vector<int>& groups, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  auto quoted = [&](Vertex v) {
    std::string s = "\"";
    for (char ch : g.label(v)) {
      if (ch == '"' || ch == '\\') s.push_back('\\');
      s.push_back(ch);
    }
    return s + "\"";
  };
  if (!groups.empty()) {
    int max_group = -1;
    for (int grp : groups) max_group = std::max(max_group, grp);
    for (int grp = 0; grp <= max_group; ++grp) {
      out << "  subgraph cluster_" << grp << " {\n";
      for (Vertex v = 0; v < g.order(); ++v)
        if (groups[static_cast<std::size_t>(v)] == grp) out << "    " << quoted(v) << ";\n";
      out << "  }\n";
    }
  } else {
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << quoted(v) << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << quoted(u) << " -- " << quoted(v) << ";\n";
  out << "}\n";
  return out.str();
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::graph6;
  return GraphFormat::edge_list;
}

}  // namespace throttle
