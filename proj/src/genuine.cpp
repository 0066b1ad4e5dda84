#include "ghz/genuine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ghz {

namespace {

std::vector<int> subset_from_mask(unsigned mask, int m) {
  std::vector<int> out;
  for (int j = 0; j < m; ++j) {
    if (mask & (1u << j)) out.push_back(j);
  }
  return out;
}

// Restriction without the duplicate-drop, used when combining with line
// selection (the selection happens before deduplication).
std::vector<std::vector<EntryWord>> restricted_rows(const ParadoxTable& t,
                                                    const std::vector<int>& parties) {
  std::vector<std::vector<EntryWord>> rows;
  rows.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    std::vector<EntryWord> r;
    r.reserve(parties.size());
    for (int j : parties) r.push_back(row[j]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<EntryWord>> dedup_rows(std::vector<std::vector<EntryWord>> rows) {
  std::vector<std::vector<EntryWord>> out;
  for (auto& row : rows) {
    if (std::find(out.begin(), out.end(), row) == out.end()) out.push_back(std::move(row));
  }
  return out;
}

std::string subset_label(const std::string& base, const std::vector<int>& parties) {
  std::string lbl = base.empty() ? "table" : base;
  lbl += "|parties{";
  for (size_t i = 0; i < parties.size(); ++i) {
    if (i) lbl += ",";
    lbl += std::to_string(parties[i] + 1);
  }
  lbl += "}";
  return lbl;
}

}  // namespace

ParadoxTable restrict_parties(const ParadoxTable& t, const std::vector<int>& parties) {
  if (parties.empty()) throw std::invalid_argument("restrict_parties: empty subset");
  if (static_cast<int>(parties.size()) >= t.parties)
    throw std::invalid_argument("restrict_parties: subset must be proper");
  for (size_t i = 0; i < parties.size(); ++i) {
    if (parties[i] < 0 || parties[i] >= t.parties)
      throw std::invalid_argument("restrict_parties: party index out of range");
    if (i > 0 && parties[i] <= parties[i - 1])
      throw std::invalid_argument("restrict_parties: indices must be strictly increasing");
  }
  auto rows = dedup_rows(restricted_rows(t, parties));
  return ParadoxTable(t.dim, static_cast<int>(parties.size()), std::move(rows),
                      subset_label(t.label, parties));
}

PartiteReport check_multipartite(const ParadoxTable& t) {
  if (!verify(t).is_paradox)
    throw std::invalid_argument("check_multipartite: the table is not a paradox");
  if (t.parties > 12)
    throw capacity_error("check_multipartite: party-subset enumeration is limited to 12 parties");

  const int m = t.parties;
  const int l = t.row_count();
  PartiteReport rep;
  rep.genuine_rows_fixed = true;

  const unsigned full = (1u << m) - 1u;
  for (unsigned mask = 1; mask < full; ++mask) {
    const auto subset = subset_from_mask(mask, m);
    const ParadoxTable rt = restrict_parties(t, subset);
    if (check_commuting(rt)) rep.commuting_complements.push_back(subset);
    if (verify(rt).is_paradox) {
      rep.reducing_subsets.push_back(subset);
      rep.genuine_rows_fixed = false;
    }
  }
  rep.genuine = rep.genuine_rows_fixed;

  if (l <= 8) {
    bool any_ok = rep.genuine_rows_fixed;  // a fixed-line reduction already decides it
    if (any_ok) {
      for (unsigned mask = 1; mask < full && any_ok; ++mask) {
        const auto subset = subset_from_mask(mask, m);
        const auto rows = restricted_rows(t, subset);
        const unsigned rows_full = (1u << l) - 1u;
        for (unsigned rmask = 1; rmask <= rows_full; ++rmask) {
          std::vector<std::vector<EntryWord>> kept;
          std::vector<int> kept_idx;
          for (int r = 0; r < l; ++r) {
            if (rmask & (1u << r)) {
              kept.push_back(rows[r]);
              kept_idx.push_back(r);
            }
          }
          if (kept.size() < 2) continue;
          ParadoxTable sub(t.dim, static_cast<int>(subset.size()), dedup_rows(std::move(kept)),
                           "");
          if (verify(sub).is_paradox) {
            any_ok = false;
            rep.rows_any_witness = std::make_pair(subset, kept_idx);
            break;
          }
        }
      }
    } else {
      std::vector<int> all_rows(l);
      std::iota(all_rows.begin(), all_rows.end(), 0);
      rep.rows_any_witness = std::make_pair(rep.reducing_subsets.front(), std::move(all_rows));
    }
    rep.genuine_rows_any = any_ok;
  }
  return rep;
}

int column_min_dimension(const ParadoxTable& t, int column) {
  if (column < 0 || column >= t.parties)
    throw std::invalid_argument("column_min_dimension: column out of range");
  std::vector<Monomial> distinct;
  for (const auto& row : t.rows) {
    const EntryWord& w = row[column];
    if (w.base == Base::I) continue;
    const Monomial m = word_monomial(w, t.dim);
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Monomial& o) {
      return o.x == m.x && o.z == m.z;
    });
    if (!seen) distinct.push_back(m);
  }
  long long g = t.dim.d;
  for (size_t i = 0; i < distinct.size(); ++i) {
    for (size_t j = i + 1; j < distinct.size(); ++j) {
      g = std::gcd(g, static_cast<long long>(commutation_exponent(distinct[i], distinct[j], t.dim)));
    }
  }
  return static_cast<int>(t.dim.d / g);
}

DimensionReport check_dimensional(const ParadoxTable& t) {
  DimensionReport rep;
  rep.per_column_min_dim.reserve(t.parties);
  for (int j = 0; j < t.parties; ++j) rep.per_column_min_dim.push_back(column_min_dimension(t, j));
  rep.genuine = std::all_of(rep.per_column_min_dim.begin(), rep.per_column_min_dim.end(),
                            [&](int v) { return v == t.dim.d; });
  return rep;
}

FamilyGenuineness check_family_genuineness(const FamilyParams& fp) {
  if (!validate_params(fp).ok)
    throw std::invalid_argument("check_family_genuineness: invalid family parameters");
  const int d = fp.dim.d;
  FamilyGenuineness g;
  g.dimensional = std::gcd(fp.c, d) == 1 && (std::gcd(fp.a, d) == 1 || std::gcd(fp.b, d) == 1);

  // Dropping a single party changes the commutation exponent of two shifted
  // lines by +-b*c, so b*c != 0 mod d breaks every one-party-smaller
  // restriction.  That leaves the cyclic collapses: the table is invariant
  // under party rotation, so the only way a smaller paradox can survive is on
  // an arithmetic progression of parties whose spacing divides M, where the
  // restricted lines coincide in groups and deduplicate to a smaller table of
  // the same cyclic shape.  Checking those few progressions directly keeps
  // this decision both cheap (divisors of M, not 2^M subsets) and in exact
  // agreement with the subset scan.
  g.multipartite = (static_cast<long long>(fp.b) * fp.c) % d != 0;
  if (g.multipartite) {
    const ParadoxTable t = generate(fp);
    const int m = fp.parties;
    for (int spacing = 2; spacing < m && g.multipartite; ++spacing) {
      if (m % spacing != 0) continue;
      std::vector<int> progression;
      for (int j = 0; j < m; j += spacing) progression.push_back(j);
      if (verify(restrict_parties(t, progression)).is_paradox) g.multipartite = false;
    }
  }
  return g;
}

Verdict project_and_verify(const ParadoxTable& t,
                           const std::vector<std::vector<StateVector>>& spans,
                           const OracleOptions& opts) {
  const int d = t.dim.d;
  const int m = t.parties;
  if (static_cast<int>(spans.size()) != m)
    throw std::invalid_argument("project_and_verify: need one span per party");

  // Orthonormal frame per party.
  std::vector<DenseOperator> frames(m);
  long long compressed_total = 1;
  for (int j = 0; j < m; ++j) {
    const auto& vecs = spans[j];
    if (vecs.empty() || static_cast<int>(vecs.size()) > d)
      throw std::invalid_argument("project_and_verify: span size must be in 1..d");
    DenseOperator v(d, static_cast<int>(vecs.size()));
    for (size_t c = 0; c < vecs.size(); ++c) {
      if (vecs[c].size() != d)
        throw std::invalid_argument("project_and_verify: span vector has wrong length");
      const double nrm = vecs[c].norm();
      if (nrm < 1e-12) throw std::invalid_argument("project_and_verify: zero span vector");
      v.col(static_cast<int>(c)) = vecs[c] / nrm;
    }
    for (int c1 = 0; c1 < v.cols(); ++c1) {
      for (int c2 = c1 + 1; c2 < v.cols(); ++c2) {
        if (std::abs(v.col(c1).dot(v.col(c2))) > 1e-9)
          throw std::invalid_argument("project_and_verify: span vectors must be orthogonal");
      }
    }
    frames[j] = v;
    compressed_total *= v.cols();
  }

  Verdict verdict;

  // Compress each line; every factor must stay unitary, i.e. the subspace
  // must be invariant for the measured word.  (Mere proportionality to a
  // unitary is not enough: a projection onto the span would slip through.)
  std::vector<DenseOperator> lines;
  lines.reserve(t.row_count());
  for (int r = 0; r < t.row_count(); ++r) {
    DenseOperator line = DenseOperator::Identity(1, 1);
    for (int j = 0; j < m; ++j) {
      const DenseOperator full = word_matrix(t.rows[r][j], t.dim);
      const DenseOperator b = frames[j].adjoint() * full * frames[j];
      const DenseOperator gram = b.adjoint() * b;
      const double defect =
          (gram - DenseOperator::Identity(b.cols(), b.cols())).norm();
      if (defect >= opts.tol_eigen) {
        verdict.failure_witness = "line " + std::to_string(r + 1) + ", party " +
                                  std::to_string(j + 1) +
                                  ": the subspace is not invariant for the measured word";
        return verdict;
      }
      line = kron(line, b);
    }
    lines.push_back(std::move(line));
  }

  verdict.commuting = true;
  for (int i = 0; i < t.row_count() && verdict.commuting; ++i) {
    for (int j = i + 1; j < t.row_count(); ++j) {
      if ((lines[i] * lines[j] - lines[j] * lines[i]).norm() >= opts.tol_algebra) {
        verdict.commuting = false;
        verdict.failure_witness = "compressed lines " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " do not commute";
        break;
      }
    }
  }

  verdict.scalar_product = false;
  if (verdict.commuting) {
    DenseOperator prod = lines[0];
    for (int r = 1; r < t.row_count(); ++r) prod = prod * lines[r];
    const Cx phi = prod.trace() / static_cast<double>(compressed_total);
    const DenseOperator scalar =
        phi * DenseOperator::Identity(compressed_total, compressed_total);
    if ((prod - scalar).norm() < opts.tol_algebra * 10 && std::abs(std::abs(phi) - 1.0) < 1e-8) {
      verdict.scalar_product = true;
      // Snap to the tau lattice when possible (the compressed phase need not
      // live there in general, but for the cases of interest it does).
      const double angle = std::arg(phi);
      long long s = std::llround(angle * d / std::numbers::pi);
      s = ((s % (2LL * d)) + 2LL * d) % (2LL * d);
      const Cx snapped(std::cos(std::numbers::pi * static_cast<double>(s) / d),
                       std::sin(std::numbers::pi * static_cast<double>(s) / d));
      if (std::abs(phi - snapped) < 1e-8) {
        verdict.quantum_phase = make_phase(static_cast<int>(s), t.dim);
      }
    } else if (verdict.failure_witness.empty()) {
      verdict.failure_witness = "compressed product of the lines is not a scalar";
    }
  }

  verdict.classical_forced = check_classical_forced(t);
  if (!verdict.classical_forced && verdict.failure_witness.empty()) {
    if (auto col = first_unforced_column(t)) {
      verdict.failure_witness = "column " + std::to_string(col->first + 1) +
                                " does not force " + std::string(1, base_char(col->second)) +
                                " values";
    }
  }

  bool nontrivial_phase = false;
  if (verdict.scalar_product) {
    if (verdict.quantum_phase) {
      nontrivial_phase = verdict.quantum_phase->s != 0;
    } else {
      DenseOperator prod = lines[0];
      for (int r = 1; r < t.row_count(); ++r) prod = prod * lines[r];
      nontrivial_phase = std::abs(prod.trace() / static_cast<double>(compressed_total) -
                                  Cx(1.0, 0.0)) > 1e-8;
    }
  }
  verdict.is_paradox =
      verdict.commuting && verdict.scalar_product && verdict.classical_forced && nontrivial_phase;
  if (!verdict.is_paradox && verdict.failure_witness.empty() && verdict.scalar_product &&
      !nontrivial_phase) {
    verdict.failure_witness = "compressed product is +identity; no contradiction";
  }
  return verdict;
}

}  // namespace ghz
