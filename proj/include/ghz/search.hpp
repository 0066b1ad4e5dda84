#pragma once
// Systematic paradox searches.
//
// Two modes share one result type:
//
//   * family search — enumerates valid parameter sets of the cyclic family
//     over parameter boxes, in lexicographic (d, M, n, q, a, b, c) order;
//   * exhaustive small search — enumerates duplicate-free sets of
//     single-base lines for small shapes (d^M bounded by the capacity),
//     pruned by pairwise commutation and by columnwise forcing feasibility.
//
// Exhaustive results are deduplicated up to party permutation and line
// order at small shapes.  The conjecture scan runs both modes and tallies
// how the genuine paradoxes relate to the predicate "d even and d < M".

#include <optional>
#include <string>
#include <vector>

#include "ghz/family.hpp"
#include "ghz/genuine.hpp"
#include "ghz/table.hpp"

namespace ghz {

struct SearchSpec {
  enum class Mode { family, exhaustive } mode = Mode::family;
  int d_lo = 2, d_hi = 4;
  int m_lo = 3, m_hi = 5;
  int max_rows = 0;          // exhaustive: cap on lines (0 = parties + 2)
  bool genuine_only = false; // keep only genuinely multipartite + dimensional
  bool include_non_paradox = false;  // exhaustive: also emit phi = +1 candidates
  bool deduplicate = true;
  long long capacity = 0;    // 0 = oracle default
};

struct SearchResult {
  ParadoxTable table;
  Verdict verdict;
  std::optional<FamilyParams> params;  // family mode only
  bool genuine_multipartite = false;
  bool genuine_dimensional = false;
};

struct SearchOutcome {
  std::vector<SearchResult> results;
  long long candidates_examined = 0;  // parameter sets / line sets inspected
  long long paradoxes_found = 0;      // before dedup and filters
};

// Canonical key of a table up to line order, and (at small shapes:
// parties <= 6 and at most 7 lines) also up to party permutation.  Phases
// play no role; only the word grid matters.
std::string canonical_form(const ParadoxTable& t);

SearchOutcome run_search(const SearchSpec& spec);

struct ConjectureReport {
  long long tables_checked = 0;
  long long paradoxes = 0;
  long long genuine_paradoxes = 0;
  // Genuine paradoxes violating "d even and d < M"; empty = conjecture holds.
  std::vector<std::string> counterexamples;
  // Paradox tallies per dimension (family + exhaustive combined).
  std::vector<std::pair<int, long long>> paradoxes_by_d;
};

// Family scan over 2 <= d <= d_hi, 3 <= M <= m_hi, plus exhaustive scans of
// the given (d, M) shapes.
ConjectureReport conjecture_scan(int d_hi, int m_hi,
                                 const std::vector<std::pair<int, int>>& exhaustive_shapes);

}  // namespace ghz
