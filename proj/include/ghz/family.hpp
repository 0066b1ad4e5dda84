#pragma once
// The cyclic paradox family and the built-in catalog.
//
// The family is parameterized by (d, M, n, p, q, a, b, c) with M = n + 2p + q.
// Line 0 is (X^a) on every party; line 1 is n copies of X^b, p copies of Y^c,
// q identities, then p more copies of Y^c; lines 2..M are the successive
// cyclic right-shifts of line 1.  The parameter conditions
//
//   partition       2p = M - n - q         (segments tile the parties)
//   line0-commute   2pac = k d,   k >= 1   (line 0 commutes with the shifts)
//   shifts-commute  2pc = k' d,   k' >= 1  (the shifted lines commute)
//   columns-forced  nb + a = k'' d, k'' >= 1 (X exponents cancel columnwise)
//   phase-odd       b k' n (M - n + 1) odd (the scalar product is -1, not +1)
//
// together make the table a paradox with quantum product
// e^{2*pi*i * b c n p (M-n+1) / d} = -1.  shifts-commute implies
// line0-commute, and the five conditions force M odd, d even, a odd and
// q even; the validator re-derives those parities instead of hard-coding
// them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghz/table.hpp"

namespace ghz {

struct FamilyParams {
  Dimension dim;
  int parties = 3;  // M
  int n = 1, p = 1, q = 0;
  int a = 1, b = 1, c = 1;
};

// Builds params with p derived from M - n - q (the validator reports the
// partition condition when that difference is odd or negative).  Throws on
// structurally meaningless input: exponents outside 1..d-1, negative segment
// lengths, M < 2.
FamilyParams family_params(int d, int parties, int n, int q, int a, int b, int c);

struct FamilyCheck {
  bool ok = false;
  // Witnesses for line0-commute / shifts-commute / columns-forced; 0 when the
  // condition has no positive witness.
  long long k = 0, k_prime = 0, k_dblprime = 0;
  // Violated condition names: "partition", "line0-commute", "shifts-commute",
  // "columns-forced", "phase-odd", plus any of the derived parities "m-odd",
  // "d-even", "a-odd", "q-even" that fail.  ok means no primitive condition
  // is violated; a parity entry can only co-occur with a primitive one (the
  // test suite checks this, which is what validates the parity derivation).
  std::vector<std::string> violated;
};

FamilyCheck validate_params(const FamilyParams& fp);

// Generates the M+1 table lines; requires validate_params(fp).ok.
ParadoxTable generate(const FamilyParams& fp, std::string label = "");

// The even-party construction: for even d it uses M = d + 2 parties and
// M + 2 lines (X (Y^{d-1})^(M-1); the M cyclic lines X^{d-1}-at-one-party,
// Y elsewhere; and Y^{d-1} X^(M-1)).  Throws for odd d.
ParadoxTable generate_even_m(Dimension dim, std::string label = "");

// The odd-M chain with d = M - 1: family(d, M, n=1, q=0, a=1, b=d-1, c=1).
ParadoxTable example2(int parties);

// Built-in tables, keyed by stable names (stable across releases; used by
// the CLI and the golden files).
const std::vector<std::pair<std::string, ParadoxTable>>& catalog();
ParadoxTable catalog_table(const std::string& name);
std::vector<std::string> catalog_names();

// Family parameter sets for the catalog entries that come from generate();
// tests cross-check the generator against the hand-entered grids.
std::optional<FamilyParams> catalog_family_params(const std::string& name);

}  // namespace ghz
