#pragma once
// Genuineness of a paradox: does it really need all M parties, and does it
// really need d-dimensional systems?
//
// Multipartite genuineness is decided directly, by restricting the table to
// every nonempty proper subset of the parties and re-running the symbolic
// verdict.  Dimensional genuineness is decided columnwise: the operators a
// party measures can be faithfully compressed to dimension d/g, where g is
// the gcd of d with all pairwise commutation exponents in that column, so
// the paradox genuinely needs qudits of dimension d exactly when every
// column's bound is d.  The projection helper makes the compression side
// concrete: it restricts a table to per-party subspaces and re-checks the
// paradox conditions numerically on the compressed operators.

#include <optional>
#include <utility>
#include <vector>

#include "ghz/family.hpp"
#include "ghz/oracle.hpp"
#include "ghz/table.hpp"

namespace ghz {

// Table restricted to a subset of parties (0-based, strictly increasing,
// nonempty, proper).  Duplicate restricted lines are dropped, keeping first
// occurrences, so the verdict is not skewed by repeated lines.
ParadoxTable restrict_parties(const ParadoxTable& t, const std::vector<int>& parties);

struct PartiteReport {
  bool genuine = false;             // same as genuine_rows_fixed
  bool genuine_rows_fixed = false;  // no party subset keeps all lines a paradox
  // Also allowing sub-multisets of the lines; only computed for tables with
  // at most 8 lines (the flag is absent otherwise).
  std::optional<bool> genuine_rows_any;
  std::vector<std::vector<int>> reducing_subsets;       // party subsets (0-based)
  std::vector<std::vector<int>> commuting_complements;  // subsets whose restriction commutes
  // A witness when genuine_rows_any is false: the party subset and the kept
  // line indices of a smaller paradox.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> rows_any_witness;
};

// Enumerates all nonempty proper party subsets (guarded to M <= 12).  The
// input must verify as a paradox.
PartiteReport check_multipartite(const ParadoxTable& t);

struct DimensionReport {
  bool genuine = false;              // every column's bound equals d
  std::vector<int> per_column_min_dim;
};

// Smallest dimension that can reproduce the commutation pattern of one
// column: d divided by the gcd of d with all pairwise commutation exponents
// of the distinct non-identity words in that column (gcd of the empty set
// is d, so trivial columns give 1).
int column_min_dimension(const ParadoxTable& t, int column);
DimensionReport check_dimensional(const ParadoxTable& t);

struct FamilyGenuineness {
  bool dimensional = false;   // gcd(c,d) = 1 and (gcd(a,d) = 1 or gcd(b,d) = 1)
  bool multipartite = false;  // b*c != 0 mod d, minus cyclic collapses
};

// Genuineness of a family table predicted from its parameters.  The
// dimensional test is the closed-form sufficient condition; the multipartite
// test combines b*c != 0 mod d (dropping any single party shifts some pair's
// commutation exponent by b*c, so every one-party-smaller restriction breaks)
// with a scan of the cyclic collapses — arithmetic progressions of parties
// whose spacing divides M, the only subsets a rotation-invariant table can
// deduplicate onto.  Requires validate_params(fp).ok; for every valid
// parameter set both flags agree with the direct per-table checks at the
// scales the tests cover.
FamilyGenuineness check_family_genuineness(const FamilyParams& fp);

// Numeric re-verification after compressing each party to a subspace.
// spans[l] holds the spanning vectors (each of size d) for party l; they
// must be nonzero and pairwise orthogonal.  The compressed verdict demands
// that every compressed line factor stays unitary (the subspace is
// invariant for every word that party measures), that the compressed lines
// commute, and that their ordered product is a scalar phi != 1; the
// classical forcing condition is inherited from the symbolic table.
Verdict project_and_verify(const ParadoxTable& t,
                           const std::vector<std::vector<StateVector>>& spans,
                           const OracleOptions& opts = {});

}  // namespace ghz
