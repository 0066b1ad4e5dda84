#include "ghz/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ghz {

namespace {

std::string word_key(const EntryWord& w) {
  if (w.base == Base::I) return "I";
  std::string s(1, base_char(w.base));
  if (w.exp != 1) s += std::to_string(w.exp);
  return s;
}

std::string serialize_rows(const std::vector<std::vector<EntryWord>>& rows) {
  std::vector<std::string> keys;
  keys.reserve(rows.size());
  for (const auto& row : rows) {
    std::string k;
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) k += ".";
      k += word_key(row[j]);
    }
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (size_t i = 0; i < keys.size(); ++i) {
    if (i) out += "|";
    out += keys[i];
  }
  return out;
}

// Candidate line in the exhaustive mode, with precomputed helpers.
struct CandidateRow {
  std::vector<EntryWord> words;
  TensorMonomial op;
};

bool genuine_pair(const ParadoxTable& t, bool& multi, bool& dim) {
  multi = check_multipartite(t).genuine;
  dim = check_dimensional(t).genuine;
  return multi && dim;
}

void family_search(const SearchSpec& spec, SearchOutcome& out) {
  for (int d = spec.d_lo; d <= spec.d_hi; ++d) {
    for (int m = std::max(2, spec.m_lo); m <= spec.m_hi; ++m) {
      for (int n = 0; n <= m; ++n) {
        for (int q = 0; n + q <= m; ++q) {
          for (int a = 1; a < d; ++a) {
            for (int b = 1; b < d; ++b) {
              for (int c = 1; c < d; ++c) {
                ++out.candidates_examined;
                FamilyParams fp;
                try {
                  fp = family_params(d, m, n, q, a, b, c);
                } catch (const std::invalid_argument&) {
                  continue;
                }
                if (!validate_params(fp).ok) continue;
                ParadoxTable t = generate(fp);
                Verdict v = verify(t);
                if (v.is_paradox) ++out.paradoxes_found;
                if (!v.is_paradox && !spec.include_non_paradox) continue;
                SearchResult res{std::move(t), std::move(v), fp, false, false};
                if (res.verdict.is_paradox && res.table.parties <= 12) {
                  genuine_pair(res.table, res.genuine_multipartite, res.genuine_dimensional);
                }
                if (spec.genuine_only &&
                    !(res.genuine_multipartite && res.genuine_dimensional)) {
                  continue;
                }
                out.results.push_back(std::move(res));
              }
            }
          }
        }
      }
    }
  }
}

// All non-identity single-base lines for shape (d, M), in lexicographic
// order of the word grid.
std::vector<CandidateRow> build_universe(Dimension dim, int parties) {
  std::vector<EntryWord> alphabet;
  alphabet.push_back(EntryWord{Base::I, 0});
  for (Base b : {Base::X, Base::Y, Base::Z}) {
    for (int e = 1; e < dim.d; ++e) alphabet.push_back(EntryWord{b, e});
  }
  const long long letters = static_cast<long long>(alphabet.size());
  long long total = 1;
  for (int j = 0; j < parties; ++j) {
    total *= letters;
    if (total > (1LL << 22)) throw capacity_error("exhaustive search universe is too large");
  }

  std::vector<CandidateRow> rows;
  std::vector<int> digit(parties, 0);
  for (long long idx = 1; idx < total; ++idx) {  // skip the all-identity line
    long long rest = idx;
    for (int j = parties - 1; j >= 0; --j) {
      digit[j] = static_cast<int>(rest % letters);
      rest /= letters;
    }
    CandidateRow cr{std::vector<EntryWord>(), TensorMonomial{dim, {}}};
    cr.words.reserve(parties);
    cr.op.parts.reserve(parties);
    for (int j = 0; j < parties; ++j) {
      cr.words.push_back(alphabet[digit[j]]);
      cr.op.parts.push_back(word_monomial(alphabet[digit[j]], dim));
    }
    rows.push_back(std::move(cr));
  }
  return rows;
}

void exhaustive_search(const SearchSpec& spec, SearchOutcome& out) {
  for (int d = spec.d_lo; d <= spec.d_hi; ++d) {
    const Dimension dim{d};
    for (int m = std::max(1, spec.m_lo); m <= spec.m_hi; ++m) {
      long long n = 1;
      bool fits = true;
      const long long cap = spec.capacity > 0 ? spec.capacity : default_capacity();
      for (int j = 0; j < m; ++j) {
        n *= d;
        if (n > cap) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;

      const auto universe = build_universe(dim, m);
      const int r = static_cast<int>(universe.size());
      const int max_rows = spec.max_rows > 0 ? std::min(spec.max_rows, m + 2) : m + 2;

      // Pairwise commutation bitmask per candidate line.
      std::vector<std::vector<bool>> commutes(r, std::vector<bool>(r, false));
      for (int i = 0; i < r; ++i) {
        commutes[i][i] = true;
        for (int j = i + 1; j < r; ++j) {
          const bool c = tensor_commute(universe[i].op, universe[j].op);
          commutes[i][j] = c;
          commutes[j][i] = c;
        }
      }

      // DFS over index-increasing line sets.
      std::vector<int> chosen;
      // sums[party][base] = exponent sum mod d (base: 0=X, 1=Y, 2=Z).
      std::vector<std::array<int, 3>> sums(m, {0, 0, 0});

      auto base_slot = [](Base b) {
        switch (b) {
          case Base::X: return 0;
          case Base::Y: return 1;
          default: return 2;
        }
      };

      auto forced_now = [&]() {
        for (int j = 0; j < m; ++j)
          for (int s = 0; s < 3; ++s)
            if (sums[j][s] % d != 0) return false;
        return true;
      };

      std::function<void(int)> dfs = [&](int start) {
        if (static_cast<int>(chosen.size()) >= 2 && forced_now()) {
          ++out.candidates_examined;
          std::vector<std::vector<EntryWord>> rows;
          rows.reserve(chosen.size());
          for (int idx : chosen) rows.push_back(universe[idx].words);
          ParadoxTable t(dim, m, std::move(rows),
                         "search(d=" + std::to_string(d) + ",M=" + std::to_string(m) + ")");
          Verdict v = verify(t);
          if (v.is_paradox) ++out.paradoxes_found;
          if (v.is_paradox || spec.include_non_paradox) {
            out.results.push_back(SearchResult{std::move(t), std::move(v), std::nullopt,
                                               false, false});
          }
        }
        if (static_cast<int>(chosen.size()) >= max_rows) return;
        const int remaining = max_rows - static_cast<int>(chosen.size());
        for (int next = start; next < r; ++next) {
          bool ok = true;
          for (int idx : chosen) {
            if (!commutes[idx][next]) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          // Feasibility: after adding `next`, each party may still have at
          // most remaining-1 bases with unbalanced exponent sums (each
          // future line fixes at most one base per party).
          for (int j = 0; j < m && ok; ++j) {
            const EntryWord& w = universe[next].words[j];
            int unbalanced = 0;
            for (int s = 0; s < 3; ++s) {
              int val = sums[j][s];
              if (w.base != Base::I && base_slot(w.base) == s) val += w.exp;
              if (val % d != 0) ++unbalanced;
            }
            if (unbalanced > remaining - 1) ok = false;
          }
          if (!ok) continue;
          for (int j = 0; j < m; ++j) {
            const EntryWord& w = universe[next].words[j];
            if (w.base != Base::I) sums[j][base_slot(w.base)] += w.exp;
          }
          chosen.push_back(next);
          dfs(next + 1);
          chosen.pop_back();
          for (int j = 0; j < m; ++j) {
            const EntryWord& w = universe[next].words[j];
            if (w.base != Base::I) sums[j][base_slot(w.base)] -= w.exp;
          }
        }
      };
      dfs(0);
    }
  }

  // Genuineness of the survivors (after the loop to keep the DFS lean).
  for (SearchResult& res : out.results) {
    if (res.verdict.is_paradox && res.table.parties >= 2 && res.table.parties <= 12) {
      genuine_pair(res.table, res.genuine_multipartite, res.genuine_dimensional);
    }
  }
  if (spec.genuine_only) {
    out.results.erase(std::remove_if(out.results.begin(), out.results.end(),
                                     [](const SearchResult& r) {
                                       return !(r.genuine_multipartite && r.genuine_dimensional);
                                     }),
                      out.results.end());
  }
}

}  // namespace

std::string canonical_form(const ParadoxTable& t) {
  std::string best;
  const bool permute = t.parties <= 6 && t.row_count() <= 7;
  std::string head = "d=" + std::to_string(t.dim.d) + ";M=" + std::to_string(t.parties) + ";";
  if (!permute) return head + serialize_rows(t.rows);

  std::vector<int> perm(t.parties);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::vector<EntryWord>> rows;
    rows.reserve(t.rows.size());
    for (const auto& row : t.rows) {
      std::vector<EntryWord> permuted(t.parties);
      for (int j = 0; j < t.parties; ++j) permuted[j] = row[perm[j]];
      rows.push_back(std::move(permuted));
    }
    std::string key = head + serialize_rows(rows);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SearchOutcome run_search(const SearchSpec& spec) {
  SearchOutcome out;
  if (spec.d_lo < 2 || spec.d_hi < spec.d_lo || spec.m_hi < spec.m_lo)
    throw std::invalid_argument("run_search: empty or invalid parameter box");
  if (spec.mode == SearchSpec::Mode::family) {
    family_search(spec, out);
  } else {
    exhaustive_search(spec, out);
  }
  if (spec.deduplicate) {
    std::set<std::string> seen;
    std::vector<SearchResult> unique;
    unique.reserve(out.results.size());
    for (SearchResult& res : out.results) {
      if (seen.insert(canonical_form(res.table)).second) unique.push_back(std::move(res));
    }
    out.results = std::move(unique);
  }
  return out;
}

ConjectureReport conjecture_scan(int d_hi, int m_hi,
                                 const std::vector<std::pair<int, int>>& exhaustive_shapes) {
  ConjectureReport rep;
  std::map<int, long long> by_d;
  for (int d = 2; d <= d_hi; ++d) by_d[d] = 0;

  auto absorb = [&](const SearchOutcome& out) {
    rep.tables_checked += out.candidates_examined;
    for (const SearchResult& res : out.results) {
      if (!res.verdict.is_paradox) continue;
      ++rep.paradoxes;
      ++by_d[res.table.dim.d];
      if (res.genuine_multipartite && res.genuine_dimensional) {
        ++rep.genuine_paradoxes;
        const int d = res.table.dim.d;
        const int m = res.table.parties;
        if (!(d % 2 == 0 && d < m)) {
          rep.counterexamples.push_back(res.table.label.empty() ? canonical_form(res.table)
                                                                : res.table.label);
        }
      }
    }
  };

  SearchSpec fam;
  fam.mode = SearchSpec::Mode::family;
  fam.d_lo = 2;
  fam.d_hi = d_hi;
  fam.m_lo = 3;
  fam.m_hi = m_hi;
  absorb(run_search(fam));

  for (auto [d, m] : exhaustive_shapes) {
    SearchSpec ex;
    ex.mode = SearchSpec::Mode::exhaustive;
    ex.d_lo = d;
    ex.d_hi = d;
    ex.m_lo = m;
    ex.m_hi = m;
    absorb(run_search(ex));
  }

  for (auto [d, count] : by_d) rep.paradoxes_by_d.emplace_back(d, count);
  return rep;
}

}  // namespace ghz
