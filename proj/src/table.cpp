#include "ghz/table.hpp"

#include <cctype>
#include <sstream>

namespace ghz {

ParadoxTable table_from_strings(Dimension dim, const std::vector<std::string>& lines,
                                std::string label) {
  std::vector<std::vector<EntryWord>> rows;
  int parties = -1;
  for (const std::string& line : lines) {
    std::istringstream in(line);
    std::vector<EntryWord> row;
    std::string tok;
    while (in >> tok) {
      Base base;
      switch (tok[0]) {
        case 'I': case '1': base = Base::I; break;
        case 'X': base = Base::X; break;
        case 'Y': base = Base::Y; break;
        case 'Z': base = Base::Z; break;
        default:
          throw std::invalid_argument("table_from_strings: bad token '" + tok + "'");
      }
      int exp = (base == Base::I) ? 0 : 1;
      if (tok.size() > 1) {
        for (size_t i = 1; i < tok.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw std::invalid_argument("table_from_strings: bad token '" + tok + "'");
        exp = std::stoi(tok.substr(1));
      }
      row.push_back(make_word(base, exp, dim));
    }
    if (parties < 0) parties = static_cast<int>(row.size());
    rows.push_back(std::move(row));
  }
  return ParadoxTable(dim, parties, std::move(rows), std::move(label));
}

TensorMonomial compile_row(const ParadoxTable& t, int row) {
  if (row < 0 || row >= t.row_count())
    throw std::invalid_argument("compile_row: row index out of range");
  TensorMonomial out{t.dim, {}};
  out.parts.reserve(static_cast<size_t>(t.parties));
  for (const EntryWord& w : t.rows[static_cast<size_t>(row)])
    out.parts.push_back(word_monomial(w, t.dim));
  return out;
}

std::optional<std::pair<int, int>> first_noncommuting_pair(const ParadoxTable& t) {
  std::vector<TensorMonomial> ops;
  ops.reserve(static_cast<size_t>(t.row_count()));
  for (int r = 0; r < t.row_count(); ++r) ops.push_back(compile_row(t, r));
  for (int i = 0; i < t.row_count(); ++i)
    for (int j = i + 1; j < t.row_count(); ++j)
      if (!tensor_commute(ops[static_cast<size_t>(i)], ops[static_cast<size_t>(j)]))
        return std::make_pair(i, j);
  return std::nullopt;
}

std::optional<PhaseExp> quantum_product(const ParadoxTable& t) {
  TensorMonomial prod = compile_row(t, 0);
  for (int r = 1; r < t.row_count(); ++r) prod = tensor_mul(prod, compile_row(t, r));
  if (!is_scalar(prod)) return std::nullopt;
  return global_phase(prod);
}

std::optional<std::pair<int, Base>> first_unforced_column(const ParadoxTable& t) {
  for (int col = 0; col < t.parties; ++col) {
    long long sums[4] = {0, 0, 0, 0};  // indexed by Base
    for (int r = 0; r < t.row_count(); ++r) {
      const EntryWord& w = t.rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
      sums[static_cast<int>(w.base)] += w.exp;
    }
    for (Base b : {Base::X, Base::Y, Base::Z})
      if (mod_reduce(sums[static_cast<int>(b)], t.dim.d) != 0)
        return std::make_pair(col, b);
  }
  return std::nullopt;
}

Verdict verify(const ParadoxTable& t) {
  Verdict v;
  auto bad_pair = first_noncommuting_pair(t);
  v.commuting = !bad_pair;
  auto phase = quantum_product(t);
  v.scalar_product = phase.has_value();
  v.quantum_phase = phase;
  auto bad_col = first_unforced_column(t);
  v.classical_forced = !bad_col;
  v.is_paradox = v.commuting && v.scalar_product && v.classical_forced && phase->s != 0;
  if (!v.commuting) {
    v.failure_witness = "lines " + std::to_string(bad_pair->first) + " and " +
                        std::to_string(bad_pair->second) + " do not commute";
  } else if (!v.scalar_product) {
    v.failure_witness = "product of the lines is not a scalar";
  } else if (!v.classical_forced) {
    v.failure_witness = "column " + std::to_string(bad_col->first + 1) + " does not force base " +
                        std::string(1, base_char(bad_col->second)) + " values";
  } else if (phase->s == 0) {
    v.failure_witness = "product is +identity; no contradiction";
  }
  return v;
}

}  // namespace ghz
