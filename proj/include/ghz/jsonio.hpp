#pragma once
// JSON table documents and plain-text rendering.
//
// Document shape (schema_version is a string and currently always "1"):
//
//   {
//     "schema_version": "1",
//     "label": "mermin-3qubit",             // optional
//     "d": 2,
//     "parties": 3,
//     "rows": [
//       [{"base": "X", "exp": 1}, {"base": "X", "exp": 1}, ...],
//       ...
//     ],
//     "expected": {                         // optional, both members optional
//       "phase_exp": 2,                     // product phase, power of tau
//       "eigenvalues": [0, 0, 0, 1]         // per line, powers of omega
//     }
//   }
//
// Entries stay as base letters plus integer exponents — never precompiled
// monomials — so documents are auditable by eye.  Parsing is strict:
// unknown members anywhere are rejected by name, as are missing or
// mistyped required members.  Syntax errors report line and column.
// Round-trip: parse(serialize(t)) reproduces the table exactly.

#include <optional>
#include <string>
#include <vector>

#include "ghz/table.hpp"

namespace ghz {

struct ExpectedBlock {
  std::optional<int> phase_exp;
  std::optional<std::vector<int>> eigenvalues;

  bool empty() const { return !phase_exp && !eigenvalues; }
};

struct TableDocument {
  ParadoxTable table;
  ExpectedBlock expected;
};

// Throws std::invalid_argument with a located message on any problem.
TableDocument parse_table_document(const std::string& text);
TableDocument load_table_document(const std::string& path);

std::string table_document_to_json(const ParadoxTable& t,
                                   const ExpectedBlock& expected = {});
void save_table_document(const std::string& path, const ParadoxTable& t,
                         const ExpectedBlock& expected = {});

// Fixed-width text grid of the table, one line per row, identity shown as
// "1", exponents inline ("X3"); includes a header with label and shape.
std::string render_table(const ParadoxTable& t);

// Word spelling used by the renderer ("I", "X", "X3", "Y2", ...).
std::string word_string(const EntryWord& w);

}  // namespace ghz
