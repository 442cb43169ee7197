#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gfree/graph.hpp"

namespace gfree {

inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decodes one graph6 record (optionally prefixed by ">>graph6<<"). Trailing
/// '\n' / '\r' is tolerated; any other trailing byte is a FormatError.
Graph parse_graph6(std::string_view text);

/// Canonical record: shortest size header, zero padding.
std::string emit_graph6(const Graph& g);

/// `graph G { ... }` with every vertex listed, then edges in lexicographic
/// order. Named vertices are emitted as quoted names.
std::string emit_dot(const Graph& g, const VertexNames& names = {});

/// Lazily decodes newline-separated graph6 records from a stream.
///
/// Blank lines are skipped; record indices are 1-based over non-blank lines.
/// In strict mode a malformed record throws a FormatError naming its index;
/// in lenient mode it is counted in `errors()` and skipped.
class CorpusStream {
 public:
  explicit CorpusStream(std::istream& in, bool lenient = false)
      : in_(&in), lenient_(lenient) {}

  std::optional<std::pair<std::size_t, Graph>> next();

  /// Raw text of the most recently yielded record.
  const std::string& last_record() const { return line_; }
  std::size_t errors() const { return errors_; }

 private:
  std::istream* in_;
  bool lenient_;
  std::size_t index_ = 0;
  std::size_t errors_ = 0;
  std::string line_;
};

}  // namespace gfree
