#include "cdt/io.hpp"

#include <algorithm>
#include <sstream>

namespace cdt {

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte outside 63..126");

  std::size_t at = 0;
  auto sixes = [&](int count) {
    if (at + static_cast<std::size_t>(count) > text.size()) throw Graph6Error("graph6: truncated order field");
    unsigned long long v = 0;
    for (int i = 0; i < count; ++i) v = v << 6 | static_cast<unsigned>(text[at++] - 63);
    return v;
  };
  unsigned long long n = 0;
  if (text[0] != 126) {
    n = sixes(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++at;
    n = sixes(3);
  } else {
    at += 2;
    n = sixes(6);
  }
  if (n > static_cast<unsigned long long>(kMaxGraph6Order))
    throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds the supported maximum");

  const unsigned long long bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const unsigned long long bytes = (bits + 5) / 6;
  if (text.size() - at != bytes)
    throw Graph6Error("graph6: body has " + std::to_string(text.size() - at) + " bytes, expected " +
                      std::to_string(bytes));

  std::vector<Edge> edges;
  unsigned long long bit = 0;
  for (int j = 1; j < static_cast<int>(n); ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int chunk = text[at + bit / 6] - 63;
      if (chunk >> (5 - bit % 6) & 1) edges.push_back({i, j});
    }
  for (; bit < bytes * 6; ++bit) {
    const int chunk = text[at + bit / 6] - 63;
    if (chunk >> (5 - bit % 6) & 1) throw Graph6Error("graph6: nonzero padding bits");
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<unsigned long long>(g.order());
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>((n >> s & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>((n >> s & 63) + 63);
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) {
      chunk = chunk << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

std::string arc_label(const ArcSeq& a, const LabelTable* labels) {
  std::vector<std::string> parts;
  for (Vertex v : a.vertices)
    parts.push_back(labels != nullptr && static_cast<std::size_t>(v) < labels->size() ? labels->label(v)
                                                                                      : std::to_string(v));
  const bool compact = std::all_of(parts.begin(), parts.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += parts[i];
  }
  return out;
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Digraph& d, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (Vertex v = 0; v < d.order(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : d.arcs()) {
    if (d.has_arc(e.v, e.u)) {
      if (e.u < e.v) os << "  " << e.u << " -> " << e.v << " [dir=none];\n";
    } else {
      os << "  " << e.u << " -> " << e.v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string emit_dot(const SeparatorDigraph& s, const LabelTable* labels, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (int v = 0; v < s.order(); ++v)
    os << "  " << v << " [label=" << quoted(arc_label(s.vertices[static_cast<std::size_t>(v)], labels)) << "];\n";
  for (int v = 0; v < s.order(); ++v)
    os << "  " << v << " -> " << s.successor[static_cast<std::size_t>(v)] << ";\n";
  for (int v = 0; v < s.order(); ++v) {
    const int t = s.transposition[static_cast<std::size_t>(v)];
    if (v < t) os << "  " << v << " -> " << t << " [dir=none, style=dashed, color=gray];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cdt
