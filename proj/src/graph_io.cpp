#include "gfree/graph_io.hpp"

#include <sstream>
#include <vector>

#include "gfree/error.hpp"

namespace gfree {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void format_error(const std::string& what, std::size_t offset) {
  throw FormatError(what + " at offset " + std::to_string(offset), 0, offset);
}

int sextet(std::string_view text, std::size_t pos) {
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    format_error("byte " + std::to_string(c) + " outside 63..126", pos);
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) format_error("missing size header", pos);

  std::size_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::size_t>(sextet(text, pos));
    pos += 1;
  } else {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      format_error("8-byte size form exceeds supported order", pos);
    }
    if (pos + 4 > text.size()) format_error("truncated size header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + i));
    if (n < 63) format_error("non-canonical 4-byte size header", pos);
    if (n > kGraph6MaxOrder) format_error("order exceeds graph6 limit", pos);
    pos += 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) format_error("truncated adjacency bits", text.size());
  if (text.size() - pos > bytes) format_error("trailing bytes after record", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int value = sextet(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bytes > 0) {
    int last = sextet(text, pos + bytes - 1);
    std::size_t used = bits - (bytes - 1) * 6;
    if ((last & ((1 << (6 - used)) - 1)) != 0) {
      format_error("nonzero padding bits", pos + bytes - 1);
    }
  }
  return Graph::build(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    fail(ErrorKind::Capacity, "graph6 supports at most " + std::to_string(kGraph6MaxOrder) + " vertices");
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string emit_dot(const Graph& g, const VertexNames& names) {
  auto node = [&](Vertex v) {
    auto it = names.find(v);
    if (it == names.end()) return std::to_string(v);
    std::string quoted = "\"";
    for (char c : it->second) {
      if (c == '"' || c == '\\') quoted.push_back('\\');
      quoted.push_back(c);
    }
    return quoted + "\"";
  };
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << node(v) << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << node(u) << " -- " << node(v) << ";\n";
  os << "}\n";
  return os.str();
}

std::optional<std::pair<std::size_t, Graph>> CorpusStream::next() {
  while (std::getline(*in_, line_)) {
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    if (line_.find_first_not_of(" \t") == std::string::npos) continue;
    ++index_;
    try {
      return std::make_pair(index_, parse_graph6(line_));
    } catch (const FormatError& e) {
      if (lenient_) {
        ++errors_;
        continue;
      }
      throw FormatError("record " + std::to_string(index_) + ": " + e.what(), index_, e.offset());
    }
  }
  return std::nullopt;
}

}  // namespace gfree
