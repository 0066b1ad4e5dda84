#include "ghz/family.hpp"

#include <algorithm>
#include <map>

namespace ghz {

FamilyParams family_params(int d, int parties, int n, int q, int a, int b, int c) {
  Dimension dim(d);
  if (parties < 2) throw std::invalid_argument("family_params: need at least two parties");
  if (n < 0 || q < 0) throw std::invalid_argument("family_params: segment lengths must be >= 0");
  if (n > parties)
    throw std::invalid_argument("family_params: the X-segment cannot exceed the party count");
  for (int e : {a, b, c})
    if (e < 1 || e >= d)
      throw std::invalid_argument("family_params: exponents must lie in 1..d-1");
  FamilyParams fp;
  fp.dim = dim;
  fp.parties = parties;
  fp.n = n;
  fp.q = q;
  // Floor division on purpose: an odd or negative M - n - q gets flagged by
  // the validator's partition condition rather than rejected here.
  fp.p = (parties - n - q) / 2;
  fp.a = a;
  fp.b = b;
  fp.c = c;
  return fp;
}

FamilyCheck validate_params(const FamilyParams& fp) {
  const long long d = fp.dim.d;
  FamilyCheck out;
  bool primitive_bad = false;
  auto flag = [&](const char* name) {
    out.violated.push_back(name);
    primitive_bad = true;
  };

  if (fp.p < 0 || 2 * fp.p != fp.parties - fp.n - fp.q) flag("partition");

  long long two_pac = 2LL * fp.p * fp.a * fp.c;
  if (two_pac > 0 && two_pac % d == 0)
    out.k = two_pac / d;
  else
    flag("line0-commute");

  long long two_pc = 2LL * fp.p * fp.c;
  if (two_pc > 0 && two_pc % d == 0)
    out.k_prime = two_pc / d;
  else
    flag("shifts-commute");

  long long nb_a = static_cast<long long>(fp.n) * fp.b + fp.a;
  if (nb_a > 0 && nb_a % d == 0)
    out.k_dblprime = nb_a / d;
  else
    flag("columns-forced");

  // Only evaluable once a shifts-commute witness exists; without one that
  // condition is already violated.
  if (out.k_prime > 0) {
    long long odd_part =
        static_cast<long long>(fp.b) * out.k_prime * fp.n * (fp.parties - fp.n + 1);
    if (odd_part % 2 == 0) flag("phase-odd");
  }

  out.ok = !primitive_bad;

  // Derived parities, re-checked from scratch; these can fail only when a
  // primitive condition also failed.
  if (fp.parties % 2 == 0) out.violated.push_back("m-odd");
  if (!fp.dim.even()) out.violated.push_back("d-even");
  if (fp.a % 2 == 0) out.violated.push_back("a-odd");
  if (fp.q % 2 != 0) out.violated.push_back("q-even");
  return out;
}

ParadoxTable generate(const FamilyParams& fp, std::string label) {
  FamilyCheck check = validate_params(fp);
  if (!check.ok) {
    std::string msg = "generate: parameters violate";
    for (const std::string& v : check.violated) msg += " " + v;
    throw std::invalid_argument(msg);
  }
  const Dimension dim = fp.dim;
  const int M = fp.parties;

  std::vector<std::vector<EntryWord>> rows;
  rows.reserve(static_cast<size_t>(M) + 1);
  rows.emplace_back(static_cast<size_t>(M), make_word(Base::X, fp.a, dim));

  // Line 1 before shifting: X^b ... X^b  Y^c ... Y^c  I ... I  Y^c ... Y^c.
  std::vector<EntryWord> line1;
  line1.reserve(static_cast<size_t>(M));
  for (int i = 0; i < fp.n; ++i) line1.push_back(make_word(Base::X, fp.b, dim));
  for (int i = 0; i < fp.p; ++i) line1.push_back(make_word(Base::Y, fp.c, dim));
  for (int i = 0; i < fp.q; ++i) line1.push_back(make_word(Base::I, 0, dim));
  for (int i = 0; i < fp.p; ++i) line1.push_back(make_word(Base::Y, fp.c, dim));

  for (int k = 0; k < M; ++k) {
    std::vector<EntryWord> row(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) row[static_cast<size_t>((j + k) % M)] = line1[static_cast<size_t>(j)];
    rows.push_back(std::move(row));
  }

  if (label.empty())
    label = "family(d=" + std::to_string(dim.d) + ",M=" + std::to_string(M) +
            ",n=" + std::to_string(fp.n) + ",q=" + std::to_string(fp.q) +
            ",a=" + std::to_string(fp.a) + ",b=" + std::to_string(fp.b) +
            ",c=" + std::to_string(fp.c) + ")";
  return ParadoxTable(dim, M, std::move(rows), std::move(label));
}

ParadoxTable generate_even_m(Dimension dim, std::string label) {
  if (!dim.even())
    throw std::invalid_argument("generate_even_m: construction needs even d, got " +
                                std::to_string(dim.d));
  const int M = dim.d + 2;
  const EntryWord x1 = make_word(Base::X, 1, dim);
  const EntryWord xd1 = make_word(Base::X, dim.d - 1, dim);
  const EntryWord y1 = make_word(Base::Y, 1, dim);
  const EntryWord yd1 = make_word(Base::Y, dim.d - 1, dim);

  std::vector<std::vector<EntryWord>> rows;
  rows.reserve(static_cast<size_t>(M) + 2);

  std::vector<EntryWord> head(static_cast<size_t>(M), yd1);
  head[0] = x1;
  rows.push_back(std::move(head));

  for (int k = 0; k < M; ++k) {
    std::vector<EntryWord> row(static_cast<size_t>(M), y1);
    row[static_cast<size_t>(k)] = xd1;
    rows.push_back(std::move(row));
  }

  std::vector<EntryWord> tail(static_cast<size_t>(M), x1);
  tail[0] = yd1;
  rows.push_back(std::move(tail));

  if (label.empty()) label = "even-m(d=" + std::to_string(dim.d) + ")";
  return ParadoxTable(dim, M, std::move(rows), std::move(label));
}

ParadoxTable example2(int parties) {
  if (parties < 3 || parties % 2 == 0)
    throw std::invalid_argument("example2: needs odd party count >= 3");
  int d = parties - 1;
  return generate(family_params(d, parties, 1, 0, 1, d - 1, 1),
                  "example2-m" + std::to_string(parties));
}

namespace {

std::vector<std::pair<std::string, ParadoxTable>> build_catalog() {
  std::vector<std::pair<std::string, ParadoxTable>> out;
  auto add = [&](const std::string& name, int d, const std::vector<std::string>& lines) {
    out.emplace_back(name, table_from_strings(Dimension(d), lines, name));
  };

  // All grids are entered literally; the generator-based tests prove they
  // coincide with generate()/generate_even_m()/example2() output.
  add("mermin-3qubit", 2,
      {"X X X",
       "X Y Y",
       "Y X Y",
       "Y Y X"});

  add("ghz-ququat-5", 4,
      {"X  X  X  X  X",
       "X3 Y  Y  Y  Y",
       "Y  X3 Y  Y  Y",
       "Y  Y  X3 Y  Y",
       "Y  Y  Y  X3 Y",
       "Y  Y  Y  Y  X3"});

  add("example2-m3", 2,
      {"X X X",
       "X Y Y",
       "Y X Y",
       "Y Y X"});

  add("example2-m5", 4,
      {"X  X  X  X  X",
       "X3 Y  Y  Y  Y",
       "Y  X3 Y  Y  Y",
       "Y  Y  X3 Y  Y",
       "Y  Y  Y  X3 Y",
       "Y  Y  Y  Y  X3"});

  add("example2-m7", 6,
      {"X  X  X  X  X  X  X",
       "X5 Y  Y  Y  Y  Y  Y",
       "Y  X5 Y  Y  Y  Y  Y",
       "Y  Y  X5 Y  Y  Y  Y",
       "Y  Y  Y  X5 Y  Y  Y",
       "Y  Y  Y  Y  X5 Y  Y",
       "Y  Y  Y  Y  Y  X5 Y",
       "Y  Y  Y  Y  Y  Y  X5"});

  add("example3-5qubit", 2,
      {"X X X X X",
       "X X X Y Y",
       "Y X X X Y",
       "Y Y X X X",
       "X Y Y X X",
       "X X Y Y X"});

  add("example4-5qubit", 2,
      {"X X X X X",
       "X Y I I Y",
       "Y X Y I I",
       "I Y X Y I",
       "I I Y X Y",
       "Y I I Y X"});

  add("example5-d2", 2,
      {"X Y Y Y",
       "X Y Y Y",
       "Y X Y Y",
       "Y Y X Y",
       "Y Y Y X",
       "Y X X X"});

  add("example5-d4", 4,
      {"X  Y3 Y3 Y3 Y3 Y3",
       "X3 Y  Y  Y  Y  Y",
       "Y  X3 Y  Y  Y  Y",
       "Y  Y  X3 Y  Y  Y",
       "Y  Y  Y  X3 Y  Y",
       "Y  Y  Y  Y  X3 Y",
       "Y  Y  Y  Y  Y  X3",
       "Y3 X  X  X  X  X"});

  add("prc-5qubit", 2,
      {"X X X X X",
       "X Y Y X X",
       "Y X Y Y Y",
       "Y Y X Y Y"});

  add("example6-3ququat", 4,
      {"X  X  X",
       "X3 Y2 Y2",
       "Y2 X3 Y2",
       "Y2 Y2 X3"});

  return out;
}

}  // namespace

const std::vector<std::pair<std::string, ParadoxTable>>& catalog() {
  static const std::vector<std::pair<std::string, ParadoxTable>> tables = build_catalog();
  return tables;
}

ParadoxTable catalog_table(const std::string& name) {
  for (const auto& [key, table] : catalog())
    if (key == name) return table;
  std::string msg = "catalog_table: unknown name '" + name + "'; known names:";
  for (const auto& [key, table] : catalog()) msg += " " + key;
  throw std::invalid_argument(msg);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [key, table] : catalog()) names.push_back(key);
  return names;
}

std::optional<FamilyParams> catalog_family_params(const std::string& name) {
  static const std::map<std::string, FamilyParams> params = {
      {"mermin-3qubit", family_params(2, 3, 1, 0, 1, 1, 1)},
      {"ghz-ququat-5", family_params(4, 5, 1, 0, 1, 3, 1)},
      {"example2-m3", family_params(2, 3, 1, 0, 1, 1, 1)},
      {"example2-m5", family_params(4, 5, 1, 0, 1, 3, 1)},
      {"example2-m7", family_params(6, 7, 1, 0, 1, 5, 1)},
      {"example3-5qubit", family_params(2, 5, 3, 0, 1, 1, 1)},
      {"example4-5qubit", family_params(2, 5, 1, 2, 1, 1, 1)},
  };
  auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

}  // namespace ghz
