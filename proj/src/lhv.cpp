#include "ghz/lhv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace ghz {

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat identity_mat(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Smith normal form: returns (D, U, V) with U * A * V = D, U and V
// unimodular, D diagonal.  Standard elimination by repeated division; no
// divisibility chain is needed for congruence solving.
void smith_normal_form(Mat a, Mat& d, Mat& u, Mat& v) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  u = identity_mat(rows);
  v = identity_mat(cols);

  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](int dst, int src, long long f) {  // row dst += f * row src
    for (int c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
    for (int c = 0; c < rows; ++c) u[dst][c] += f * u[src][c];
  };
  auto add_col = [&](int dst, int src, long long f) {  // col dst += f * col src
    for (int r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
    for (int r = 0; r < cols; ++r) v[r][dst] += f * v[r][src];
  };

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry in the remaining block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) {  // block is zero; done with the whole matrix
        t = steps;
        break;
      }
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0) {
          add_row(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) clean = false;  // remainder survives; retry with smaller pivot
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0) {
          add_col(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
      }
      if (clean) {
        if (a[t][t] < 0) {
          for (int c = 0; c < cols; ++c) a[t][c] = -a[t][c];
          for (int c = 0; c < rows; ++c) u[t][c] = -u[t][c];
        }
        break;
      }
    }
    if (t >= steps) break;
  }
  d = std::move(a);
}

long long mod_ll(long long x, long long m) {
  const long long r = x % m;
  return r < 0 ? r + m : r;
}

// Solves s * w == c (mod d) for w; requires gcd(s, d) | c.
long long solve_congruence(long long s, long long c, long long d) {
  s = mod_ll(s, d);
  c = mod_ll(c, d);
  if (s == 0) return 0;  // c must be 0 here
  const long long g = std::gcd(s, d);
  const long long s1 = s / g, c1 = c / g, d1 = d / g;
  // Inverse of s1 mod d1 by extended Euclid.
  long long r0 = d1, r1 = s1, x0 = 0, x1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  return mod_ll(c1 * mod_ll(x0, d1), d1);
}

std::string variable_name(const std::pair<int, Base>& v) {
  return std::string(1, static_cast<char>(std::tolower(base_char(v.second)))) +
         std::to_string(v.first + 1);
}

}  // namespace

AssignmentSystem build_system(const ParadoxTable& t, const std::vector<int>& targets) {
  if (static_cast<int>(targets.size()) != t.row_count())
    throw std::invalid_argument("build_system: need one target per line");
  AssignmentSystem sys;
  sys.dim = t.dim;
  for (int j = 0; j < t.parties; ++j) {
    for (Base b : {Base::X, Base::Y, Base::Z}) {
      const bool occurs = std::any_of(t.rows.begin(), t.rows.end(), [&](const auto& row) {
        return row[j].base == b && row[j].exp != 0;
      });
      if (occurs) sys.variables.emplace_back(j, b);
    }
  }
  sys.coeffs.assign(t.row_count(), std::vector<int>(sys.variables.size(), 0));
  for (int r = 0; r < t.row_count(); ++r) {
    for (size_t vi = 0; vi < sys.variables.size(); ++vi) {
      const auto& [party, base] = sys.variables[vi];
      const EntryWord& w = t.rows[r][party];
      if (w.base == base) sys.coeffs[r][vi] = w.exp % t.dim.d;
    }
  }
  sys.targets.reserve(targets.size());
  for (int mu : targets) sys.targets.push_back(mod_reduce(mu, t.dim.d));
  return sys;
}

std::vector<int> eigen_targets(const ParadoxTable& t, const StateVector& psi,
                               const OracleOptions& opts) {
  std::vector<int> targets;
  targets.reserve(t.row_count());
  for (int r = 0; r < t.row_count(); ++r) {
    const auto lambda = row_eigenvalue_on(t, r, psi, opts.tol_eigen);
    if (!lambda)
      throw std::invalid_argument("eigen_targets: the state is not an eigenstate of line " +
                                  std::to_string(r + 1));
    const double angle = std::arg(*lambda);
    long long mu = std::llround(angle * t.dim.d / (2.0 * std::numbers::pi));
    mu = mod_ll(mu, t.dim.d);
    const Cx root(std::cos(2.0 * std::numbers::pi * static_cast<double>(mu) / t.dim.d),
                  std::sin(2.0 * std::numbers::pi * static_cast<double>(mu) / t.dim.d));
    if (std::abs(*lambda - root) > 1e-6)
      throw std::invalid_argument("eigen_targets: eigenvalue of line " + std::to_string(r + 1) +
                                  " is not a d-th root of unity");
    targets.push_back(static_cast<int>(mu));
  }
  return targets;
}

std::optional<std::vector<int>> ks_targets(const ParadoxTable& t) {
  const auto phase = quantum_product(t);
  if (!phase || phase->s % 2 != 0) return std::nullopt;
  std::vector<int> targets(t.row_count(), 0);
  targets.back() = mod_reduce(phase->s / 2, t.dim.d);
  return targets;
}

LhvResult solve_or_refute(const AssignmentSystem& sys) {
  const int rows = static_cast<int>(sys.coeffs.size());
  const int cols = static_cast<int>(sys.variables.size());
  const long long d = sys.dim.d;
  LhvResult res;

  // Preferred certificate: summing all lines.  If every variable cancels
  // mod d while the summed target does not, the all-ones combination is a
  // refutation.
  {
    bool cancels = true;
    for (int j = 0; j < cols && cancels; ++j) {
      long long s = 0;
      for (int r = 0; r < rows; ++r) s += sys.coeffs[r][j];
      if (mod_ll(s, d) != 0) cancels = false;
    }
    long long target_sum = 0;
    for (int mu : sys.targets) target_sum += mu;
    if (cancels && mod_ll(target_sum, d) != 0) {
      Refutation ref;
      ref.y.assign(rows, 1);
      ref.combined_target = static_cast<int>(mod_ll(target_sum, d));
      res.solvable = false;
      res.refutation = std::move(ref);
      return res;
    }
  }

  Mat a(rows, std::vector<long long>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = sys.coeffs[r][c];
  Mat dmat, u, v;
  smith_normal_form(a, dmat, u, v);

  std::vector<long long> c(rows, 0);  // transformed targets
  for (int i = 0; i < rows; ++i) {
    long long s = 0;
    for (int r = 0; r < rows; ++r) s += u[i][r] * sys.targets[r];
    c[i] = mod_ll(s, d);
  }

  auto make_refutation = [&](int i, long long g) {
    Refutation ref;
    const long long f = d / g;
    ref.y.resize(rows);
    long long combined = 0;
    for (int r = 0; r < rows; ++r) {
      ref.y[r] = static_cast<int>(mod_ll(f * u[i][r], d));
      combined += static_cast<long long>(ref.y[r]) * sys.targets[r];
    }
    ref.combined_target = static_cast<int>(mod_ll(combined, d));
    // Safety net: the certificate must annihilate every column.
    for (int j = 0; j < cols; ++j) {
      long long s = 0;
      for (int r = 0; r < rows; ++r) s += static_cast<long long>(ref.y[r]) * sys.coeffs[r][j];
      if (mod_ll(s, d) != 0)
        throw std::logic_error("solve_or_refute: invalid refutation certificate");
    }
    if (ref.combined_target == 0)
      throw std::logic_error("solve_or_refute: refutation certificate has zero target");
    res.solvable = false;
    res.refutation = std::move(ref);
  };

  std::vector<long long> w(cols, 0);
  for (int i = 0; i < rows; ++i) {
    const long long s = (i < std::min(rows, cols)) ? dmat[i][i] : 0;
    const long long g = std::gcd(s, d) == 0 ? d : std::gcd(s, d);
    if (c[i] % g != 0) {
      make_refutation(i, g);
      return res;
    }
    if (i < cols && s != 0) w[i] = solve_congruence(s, c[i], d);
  }

  res.solvable = true;
  res.assignment.resize(cols);
  for (int j = 0; j < cols; ++j) {
    long long s = 0;
    for (int k = 0; k < cols; ++k) s += v[j][k] * w[k];
    res.assignment[j] = static_cast<int>(mod_ll(s, d));
  }
  // Safety net: the assignment must actually satisfy the system.
  for (int r = 0; r < rows; ++r) {
    long long s = 0;
    for (int j = 0; j < cols; ++j) s += static_cast<long long>(sys.coeffs[r][j]) * res.assignment[j];
    if (mod_ll(s - sys.targets[r], d) != 0)
      throw std::logic_error("solve_or_refute: solver produced an invalid assignment");
  }
  return res;
}

long long brute_force_count(const AssignmentSystem& sys) {
  const int cols = static_cast<int>(sys.variables.size());
  const int rows = static_cast<int>(sys.coeffs.size());
  const long long d = sys.dim.d;
  double total = 1.0;
  for (int j = 0; j < cols; ++j) {
    total *= static_cast<double>(d);
    if (total > 1e8) throw capacity_error("brute_force_count: assignment space exceeds 1e8");
  }

  std::vector<int> value(cols, 0);
  std::vector<long long> sum(rows, 0);
  for (int r = 0; r < rows; ++r) sum[r] = mod_ll(-sys.targets[r], d);

  long long count = 0;
  for (;;) {
    bool sat = std::all_of(sum.begin(), sum.end(), [](long long s) { return s == 0; });
    if (sat) ++count;
    int j = 0;
    while (j < cols) {
      // Bump variable j by one; adjust the running residuals incrementally.
      for (int r = 0; r < rows; ++r) sum[r] = mod_ll(sum[r] + sys.coeffs[r][j], d);
      if (++value[j] < d) break;
      // Wrapped to zero: the d increments have already cycled the residuals.
      value[j] = 0;
      ++j;
    }
    if (j == cols) break;
  }
  return count;
}

std::string equation_string(const AssignmentSystem& sys, int row) {
  std::string s;
  bool first = true;
  for (size_t j = 0; j < sys.variables.size(); ++j) {
    const int coef = sys.coeffs[row][j];
    if (coef == 0) continue;
    if (!first) s += " + ";
    if (coef != 1) s += std::to_string(coef) + "*";
    s += variable_name(sys.variables[j]);
    first = false;
  }
  if (first) s += "0";
  s += " = " + std::to_string(sys.targets[row]) + "  (mod " + std::to_string(sys.dim.d) + ")";
  return s;
}

std::string render_certificate(const AssignmentSystem& sys, const Refutation& ref) {
  std::string s = "combining lines with weights (";
  for (size_t r = 0; r < ref.y.size(); ++r) {
    if (r) s += ",";
    s += std::to_string(ref.y[r]);
  }
  s += "): every variable cancels mod " + std::to_string(sys.dim.d) +
       ", but the targets combine to " + std::to_string(ref.combined_target) +
       " != 0  (mod " + std::to_string(sys.dim.d) + ")";
  return s;
}

}  // namespace ghz
