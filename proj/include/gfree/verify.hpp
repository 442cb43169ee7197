#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gfree/graph.hpp"
#include "gfree/report.hpp"

namespace gfree {

/// Lemma ids understood by verify_lemma, with their supported s ranges:
///   2.2i  h1(s) is P10-free                          5..8
///   2.2w  known witness sets replayed in h1(s)       5..8
///   2.3   h2(s) is S8(0,0,0,1)-free and T*8-free     3..5
///   2.4   h3(s) is S7(1,0,1)-free                    4..6
///   2.5   h4(s) is S8^(2)-free                       3..5
///   2.5p  h4(s)[B_i u {z}] is Petersen for every i   3..5
///   4.1   path-pair clauses on all of h1(s)          2..8
///   5.1   closure sets for every edge X in h1(s)     2..8
///   5.3   counting bounds for connected X, |X|=2,3   2..8
struct LemmaRange {
  int lo;
  int hi;
};
/// Throws UsageError for unknown ids.
LemmaRange lemma_range(std::string_view id);

/// Runs the lemma for every s in [lo, hi], stopping at the first failure.
/// Unknown ids throw UsageError; s outside the supported range throws
/// ConstructionError. With no range the full supported range is used.
Report verify_lemma(std::string_view id, std::optional<std::pair<int, int>> s = std::nullopt);

/// Diameter implications: diam >= 20 -> T8^(1), >= 16 -> T8^(2), >= 12 -> T9.
/// Hosts failing the connected / min degree 3 / {C3,C4}-free gate are vacuous.
Report check_diam_theorem(const Graph& g);

/// Max-degree implications with thresholds 943218 / 190375 / 197433. No
/// desk-scale host meets them, so the report is vacuous unless
/// assume_hypothesis forces the searches to run.
Report check_maxdeg_theorem(const Graph& g, bool assume_hypothesis = false);

struct ScanOptions {
  unsigned jobs = 1;
  bool lenient = false;
};

/// Keeps graph6 records that are connected, min degree >= 3, {C3,C4}-free and
/// free of the tree named by tree_id. Members are reported in input order
/// whatever the number of jobs.
Report scan_corpus(std::istream& in, std::string_view tree_id, const ScanOptions& options = {});

}  // namespace gfree
