#pragma once
// Operator tables and the symbolic paradox verdict.
//
// A paradox candidate is a rectangular table of single-party words I, X^e,
// Y^e, Z^e (columns = parties, lines = multiparty operators).  The verdict
// asks three questions, all answered exactly in the monomial algebra:
//
//   * do all lines commute as multiparty operators,
//   * is the ordered product of the lines a scalar phi * identity,
//   * does every column force the classical value of each line's product to
//     +1 (per-column exponent sums of each base vanish mod d)?
//
// A table is a paradox when all three hold and phi != +1: quantum mechanics
// fixes the product of the measured values to phi while any noncontextual
// value assignment is forced to +1.

#include <optional>
#include <string>
#include <vector>

#include "ghz/weyl.hpp"

namespace ghz {

enum class Base { I, X, Y, Z };

inline char base_char(Base b) {
  switch (b) {
    case Base::I: return 'I';
    case Base::X: return 'X';
    case Base::Y: return 'Y';
    case Base::Z: return 'Z';
  }
  return '?';
}

// One table entry: base^exp with 0 <= exp < d, normalized so that exp = 0
// always appears as the identity word (base I, exp 0).
struct EntryWord {
  Base base = Base::I;
  int exp = 0;

  friend bool operator==(const EntryWord& a, const EntryWord& b) {
    return a.base == b.base && a.exp == b.exp;
  }
  friend bool operator!=(const EntryWord& a, const EntryWord& b) { return !(a == b); }
};

inline EntryWord make_word(Base base, int exp, Dimension dim) {
  exp = static_cast<int>(mod_reduce(exp, dim.d));  // B^d = 1 for every base
  if (base == Base::I && exp != 0)
    throw std::invalid_argument("make_word: identity carries no exponent");
  if (exp == 0) return EntryWord{Base::I, 0};
  return EntryWord{base, exp};
}

// Canonical monomial of a word.
inline Monomial word_monomial(const EntryWord& w, Dimension dim) {
  switch (w.base) {
    case Base::I: return monomial_identity();
    case Base::X: return monomial_pow(x_op(), w.exp, dim);
    case Base::Y: return monomial_pow(y_op(dim), w.exp, dim);
    case Base::Z: return monomial_pow(z_op(), w.exp, dim);
  }
  throw std::invalid_argument("word_monomial: bad base");
}

// Rectangular table of entry words.  Lines are kept in the order given;
// the ordered product below multiplies line 0 first.
struct ParadoxTable {
  Dimension dim;
  int parties = 1;
  std::vector<std::vector<EntryWord>> rows;
  std::string label;

  ParadoxTable(Dimension d, int m, std::vector<std::vector<EntryWord>> r, std::string lbl = "")
      : dim(d), parties(m), rows(std::move(r)), label(std::move(lbl)) {
    if (parties < 1) throw std::invalid_argument("ParadoxTable: need at least one party");
    if (rows.empty()) throw std::invalid_argument("ParadoxTable: need at least one row");
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != parties)
        throw std::invalid_argument("ParadoxTable: ragged row (expected " +
                                    std::to_string(parties) + " entries)");
      for (const EntryWord& w : row) {
        if (w.exp < 0 || w.exp >= dim.d)
          throw std::invalid_argument("ParadoxTable: entry exponent out of range");
        if ((w.base == Base::I) != (w.exp == 0))
          throw std::invalid_argument("ParadoxTable: identity entries must be I with exp 0");
      }
    }
  }

  int row_count() const { return static_cast<int>(rows.size()); }

  friend bool operator==(const ParadoxTable& a, const ParadoxTable& b) {
    return a.dim == b.dim && a.parties == b.parties && a.rows == b.rows;
  }
};

// Convenience: build a table from strings like "X3 Y I Z2" (one token per
// party, base letter optionally followed by a decimal exponent, exp 1
// implied).  Used heavily by tests and the catalog.
ParadoxTable table_from_strings(Dimension dim, const std::vector<std::string>& lines,
                                std::string label = "");

// The multiparty operator of one line.
TensorMonomial compile_row(const ParadoxTable& t, int row);

// First pair of non-commuting lines in lexicographic order, if any.
std::optional<std::pair<int, int>> first_noncommuting_pair(const ParadoxTable& t);
inline bool check_commuting(const ParadoxTable& t) { return !first_noncommuting_pair(t); }

// Ordered product of all lines; nullopt when the result is not a scalar
// multiple of the identity.  When a phase is returned the product equals
// tau^s * identity exactly.
std::optional<PhaseExp> quantum_product(const ParadoxTable& t);

// First (column, base) whose exponent sum over all lines is nonzero mod d,
// i.e. the first column that fails to force the classical product to +1.
std::optional<std::pair<int, Base>> first_unforced_column(const ParadoxTable& t);
inline bool check_classical_forced(const ParadoxTable& t) { return !first_unforced_column(t); }

struct Verdict {
  bool commuting = false;
  bool scalar_product = false;
  std::optional<PhaseExp> quantum_phase;  // set when scalar_product
  bool classical_forced = false;
  bool is_paradox = false;
  std::string failure_witness;  // empty when is_paradox
};

// Full symbolic verdict; is_paradox requires all three checks plus a phase
// different from +1.  For commuting tables the verdict does not depend on
// the order of the lines.
Verdict verify(const ParadoxTable& t);

}  // namespace ghz
