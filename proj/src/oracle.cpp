#include "ghz/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ghz {

namespace {

constexpr long long kDefaultCapacity = 4096;

Cx unit_phase(double angle) { return Cx(std::cos(angle), std::sin(angle)); }

// tau^s for the working dimension.
Cx tau_power(long long s, Dimension dim) {
  return unit_phase(std::numbers::pi * static_cast<double>(s) / dim.d);
}

// A generalized permutation matrix: column c has its single nonzero entry
// coef[c] in row target[c].  Exact for products of exact inputs: matrix
// products of such matrices never create cancellation, so zero entries stay
// exactly zero in floating point.
struct GenPerm {
  std::vector<int> target;
  std::vector<Cx> coef;

  int size() const { return static_cast<int>(target.size()); }
};

GenPerm genperm_identity(long long n) {
  GenPerm g;
  g.target.resize(n);
  g.coef.assign(n, Cx(1.0, 0.0));
  for (long long c = 0; c < n; ++c) g.target[c] = static_cast<int>(c);
  return g;
}

// Matrix product a * b (apply b first).
GenPerm genperm_mul(const GenPerm& a, const GenPerm& b) {
  GenPerm r;
  const int n = b.size();
  r.target.resize(n);
  r.coef.resize(n);
  for (int c = 0; c < n; ++c) {
    const int mid = b.target[c];
    r.target[c] = a.target[mid];
    r.coef[c] = a.coef[mid] * b.coef[c];
  }
  return r;
}

// Frobenius norm of a*b - b*a, computed columnwise without forming matrices.
double genperm_commutator_norm(const GenPerm& a, const GenPerm& b) {
  const GenPerm ab = genperm_mul(a, b);
  const GenPerm ba = genperm_mul(b, a);
  double sq = 0.0;
  for (int c = 0; c < ab.size(); ++c) {
    if (ab.target[c] == ba.target[c]) {
      sq += std::norm(ab.coef[c] - ba.coef[c]);
    } else {
      sq += std::norm(ab.coef[c]) + std::norm(ba.coef[c]);
    }
  }
  return std::sqrt(sq);
}

// Extracts the generalized-permutation structure of a dense matrix whose
// zero entries are exact zeros (true for anything built here from the base
// matrices by products).
GenPerm genperm_from_dense(const DenseOperator& m) {
  GenPerm g;
  const int n = static_cast<int>(m.cols());
  g.target.resize(n);
  g.coef.resize(n);
  for (int c = 0; c < n; ++c) {
    int hit = -1;
    for (int r = 0; r < n; ++r) {
      if (std::abs(m(r, c)) > 0.5) {
        if (hit >= 0) throw std::logic_error("matrix is not a generalized permutation");
        hit = r;
      }
    }
    if (hit < 0) throw std::logic_error("matrix has an empty column");
    g.target[c] = hit;
    g.coef[c] = m(hit, c);
  }
  return g;
}

// Multiparty generalized permutation of one table line, assembled digit by
// digit from the per-party d x d factors (party 0 most significant).
GenPerm row_genperm(const ParadoxTable& t, int row, long long n) {
  const int d = t.dim.d;
  const int m = t.parties;
  std::vector<GenPerm> factor(m);
  for (int j = 0; j < m; ++j) {
    factor[j] = genperm_from_dense(word_matrix(t.rows[row][j], t.dim));
  }
  GenPerm g;
  g.target.resize(n);
  g.coef.resize(n);
  std::vector<int> digits(m);
  for (long long c = 0; c < n; ++c) {
    long long rest = c;
    for (int j = m - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(rest % d);
      rest /= d;
    }
    long long out = 0;
    Cx coef(1.0, 0.0);
    for (int j = 0; j < m; ++j) {
      out = out * d + factor[j].target[digits[j]];
      coef *= factor[j].coef[digits[j]];
    }
    g.target[c] = static_cast<int>(out);
    g.coef[c] = coef;
  }
  return g;
}

// a * columns-of-v, exploiting the generalized-permutation structure.
DenseOperator genperm_apply(const GenPerm& a, const DenseOperator& v) {
  DenseOperator out = DenseOperator::Zero(v.rows(), v.cols());
  for (int c = 0; c < a.size(); ++c) {
    out.row(a.target[c]) += a.coef[c] * v.row(c);
  }
  return out;
}

long long capacity_in_effect(const OracleOptions& opts) {
  return opts.capacity > 0 ? opts.capacity : default_capacity();
}

// Splits the index range [0, n) into maximal runs where consecutive values
// of `key` differ by less than `gap`.  `key` must be sorted ascending.
std::vector<std::pair<int, int>> cluster_ranges(const Eigen::VectorXd& key, double gap) {
  std::vector<std::pair<int, int>> ranges;
  const int n = static_cast<int>(key.size());
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || key[i] - key[i - 1] > gap) {
      ranges.emplace_back(start, i);
      start = i;
    }
  }
  return ranges;
}

}  // namespace

long long default_capacity() {
  if (const char* env = std::getenv("GHZKIT_CAPACITY")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v >= 2) return v;
  }
  return kDefaultCapacity;
}

long long checked_total_dimension(Dimension dim, int parties, const OracleOptions& opts) {
  const long long cap = capacity_in_effect(opts);
  long long n = 1;
  for (int j = 0; j < parties; ++j) {
    if (n > cap / dim.d) {
      throw capacity_error("total dimension " + std::to_string(dim.d) + "^" +
                           std::to_string(parties) + " exceeds the capacity bound " +
                           std::to_string(cap));
    }
    n *= dim.d;
  }
  if (n > cap) {
    throw capacity_error("total dimension exceeds the capacity bound " + std::to_string(cap));
  }
  return n;
}

DenseOperator base_matrix(Base b, Dimension dim) {
  const int d = dim.d;
  DenseOperator m = DenseOperator::Zero(d, d);
  switch (b) {
    case Base::I:
      m.setIdentity();
      break;
    case Base::X:
      // X|k> = |k+1 mod d>
      for (int k = 0; k < d; ++k) m((k + 1) % d, k) = 1.0;
      break;
    case Base::Z:
      // Z|k> = omega^k |k>
      for (int k = 0; k < d; ++k) m(k, k) = tau_power(2LL * k, dim);
      break;
    case Base::Y:
      // Y = tau^p X^{d-1} Z with p the parity of d.
      for (int k = 0; k < d; ++k) {
        m((k + d - 1) % d, k) = tau_power(dim.parity() + 2LL * k, dim);
      }
      break;
  }
  return m;
}

DenseOperator word_matrix(const EntryWord& w, Dimension dim) {
  DenseOperator result = DenseOperator::Identity(dim.d, dim.d);
  const DenseOperator base = base_matrix(w.base, dim);
  for (int i = 0; i < w.exp; ++i) result = base * result;
  if (w.base == Base::I) return DenseOperator::Identity(dim.d, dim.d);
  return result;
}

DenseOperator monomial_matrix(const Monomial& m, Dimension dim) {
  DenseOperator xz = word_matrix(EntryWord{Base::X, m.x}, dim) *
                     word_matrix(EntryWord{Base::Z, m.z}, dim);
  return tau_power(m.phase.s, dim) * xz;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator row_matrix(const ParadoxTable& t, int row, const OracleOptions& opts) {
  if (row < 0 || row >= t.row_count()) throw std::invalid_argument("row index out of range");
  checked_total_dimension(t.dim, t.parties, opts);
  DenseOperator result = word_matrix(t.rows[row][0], t.dim);
  for (int j = 1; j < t.parties; ++j) {
    result = kron(result, word_matrix(t.rows[row][j], t.dim));
  }
  return result;
}

StateVector ghz_state(Dimension dim, int parties, const std::vector<int>& profile,
                      const OracleOptions& opts) {
  if (!profile.empty() && static_cast<int>(profile.size()) != dim.d) {
    throw std::invalid_argument("phase profile must have one exponent per level");
  }
  const long long n = checked_total_dimension(dim, parties, opts);
  StateVector psi = StateVector::Zero(n);
  long long stride = 0;  // index of |k,...,k> is k * (1 + d + ... + d^{M-1})
  long long w = 1;
  for (int j = 0; j < parties; ++j) {
    stride += w;
    w *= dim.d;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim.d));
  for (int k = 0; k < dim.d; ++k) {
    const int s = profile.empty() ? 0 : profile[k];
    psi[k * stride] = amp * tau_power(s, dim);
  }
  return psi;
}

StateVector apply_row(const ParadoxTable& t, int row, const StateVector& psi) {
  if (row < 0 || row >= t.row_count()) throw std::invalid_argument("row index out of range");
  const int d = t.dim.d;
  const int m = t.parties;
  long long n = 1;
  for (int j = 0; j < m; ++j) n *= d;
  if (psi.size() != n) throw std::invalid_argument("state size does not match the table shape");

  StateVector cur = psi;
  std::vector<Cx> slot(d);
  for (int j = 0; j < m; ++j) {
    const DenseOperator op = word_matrix(t.rows[row][j], t.dim);
    long long stride = 1;
    for (int k = j + 1; k < m; ++k) stride *= d;
    const long long block = stride * d;
    StateVector next = StateVector::Zero(n);
    for (long long base = 0; base < n; base += block) {
      for (long long off = 0; off < stride; ++off) {
        for (int i = 0; i < d; ++i) slot[i] = cur[base + i * stride + off];
        for (int i = 0; i < d; ++i) {
          Cx acc(0.0, 0.0);
          for (int k = 0; k < d; ++k) acc += op(i, k) * slot[k];
          next[base + i * stride + off] = acc;
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::optional<Cx> eigenvalue_on(const DenseOperator& a, const StateVector& psi, double tol) {
  const StateVector image = a * psi;
  const Cx lambda = psi.dot(image);
  if ((image - lambda * psi).norm() >= tol) return std::nullopt;
  return lambda;
}

std::optional<Cx> row_eigenvalue_on(const ParadoxTable& t, int row, const StateVector& psi,
                                    double tol) {
  const StateVector image = apply_row(t, row, psi);
  const Cx lambda = psi.dot(image);
  if ((image - lambda * psi).norm() >= tol) return std::nullopt;
  return lambda;
}

JointBasis joint_eigenbasis(const ParadoxTable& t, const OracleOptions& opts) {
  if (auto clash = first_noncommuting_pair(t)) {
    throw std::invalid_argument("lines " + std::to_string(clash->first) + " and " +
                                std::to_string(clash->second) +
                                " do not commute; no joint eigenbasis exists");
  }
  const long long n = checked_total_dimension(t.dim, t.parties, opts);
  const double gap = 1e-6;

  // Invariant: `blocks` holds orthonormal bases of mutually orthogonal
  // subspaces; after processing line r, every block lies inside a joint
  // eigenspace of lines 0..r.  Later lines preserve those blocks because
  // all lines commute.
  std::vector<DenseOperator> blocks;
  blocks.push_back(DenseOperator::Identity(n, n));

  std::vector<GenPerm> rows;
  rows.reserve(t.row_count());
  for (int r = 0; r < t.row_count(); ++r) rows.push_back(row_genperm(t, r, n));

  for (const GenPerm& a : rows) {
    std::vector<DenseOperator> next;
    for (const DenseOperator& v : blocks) {
      const long long k = v.cols();
      if (k == 1) {
        next.push_back(v);
        continue;
      }
      const DenseOperator av = genperm_apply(a, v);
      const DenseOperator b = v.adjoint() * av;  // restriction of the line to the block
      // Split by the Hermitian part, then the anti-Hermitian part; together
      // they separate all eigenvalues of the (normal) restriction.
      const DenseOperator h1 = b + b.adjoint();
      Eigen::SelfAdjointEigenSolver<DenseOperator> es1(h1);
      const DenseOperator q1 = es1.eigenvectors();
      for (auto [lo, hi] : cluster_ranges(es1.eigenvalues(), gap)) {
        const DenseOperator v1 = v * q1.middleCols(lo, hi - lo);
        if (hi - lo == 1) {
          next.push_back(v1);
          continue;
        }
        const DenseOperator av1 = genperm_apply(a, v1);
        const DenseOperator b1 = v1.adjoint() * av1;
        const DenseOperator h2 = Cx(0.0, 1.0) * (b1 - b1.adjoint());
        Eigen::SelfAdjointEigenSolver<DenseOperator> es2(h2);
        const DenseOperator q2 = es2.eigenvectors();
        for (auto [lo2, hi2] : cluster_ranges(es2.eigenvalues(), gap)) {
          next.push_back(v1 * q2.middleCols(lo2, hi2 - lo2));
        }
      }
    }
    blocks = std::move(next);
  }

  JointBasis basis;
  basis.vectors.reserve(n);
  for (const DenseOperator& v : blocks) {
    for (long long c = 0; c < v.cols(); ++c) {
      StateVector vec = v.col(c);
      for (long long i = 0; i < vec.size(); ++i) {
        if (std::abs(vec[i]) > 1e-8) {
          vec *= std::conj(vec[i]) / std::abs(vec[i]);
          break;
        }
      }
      basis.vectors.push_back(std::move(vec));
    }
  }
  basis.eigenvalues.assign(basis.vectors.size(), std::vector<Cx>(t.row_count()));
  for (int r = 0; r < t.row_count(); ++r) {
    for (size_t vidx = 0; vidx < basis.vectors.size(); ++vidx) {
      const StateVector& vec = basis.vectors[vidx];
      StateVector image = StateVector::Zero(n);
      for (long long c = 0; c < n; ++c) {
        image[rows[r].target[c]] += rows[r].coef[c] * vec[c];
      }
      const Cx lambda = vec.dot(image);
      if ((image - lambda * vec).norm() > opts.tol_basis) {
        throw std::logic_error("refinement failed to produce a joint eigenvector");
      }
      basis.eigenvalues[vidx][r] = lambda;
    }
  }
  return basis;
}

Verdict oracle_verify(const ParadoxTable& t, const OracleOptions& opts) {
  const long long n = checked_total_dimension(t.dim, t.parties, opts);
  std::vector<GenPerm> rows;
  rows.reserve(t.row_count());
  for (int r = 0; r < t.row_count(); ++r) rows.push_back(row_genperm(t, r, n));

  Verdict v;
  v.commuting = true;
  for (int i = 0; i < t.row_count() && v.commuting; ++i) {
    for (int j = i + 1; j < t.row_count(); ++j) {
      if (genperm_commutator_norm(rows[i], rows[j]) >= opts.tol_algebra) {
        v.commuting = false;
        v.failure_witness = "lines " + std::to_string(i) + " and " + std::to_string(j) +
                            " do not commute";
        break;
      }
    }
  }

  v.scalar_product = false;
  if (v.commuting) {
    GenPerm prod = rows[0];
    for (int r = 1; r < t.row_count(); ++r) prod = genperm_mul(prod, rows[r]);
    bool scalar = true;
    for (int c = 0; c < prod.size() && scalar; ++c) {
      if (prod.target[c] != c) scalar = false;
      if (std::abs(prod.coef[c] - prod.coef[0]) >= opts.tol_algebra) scalar = false;
    }
    if (scalar) {
      // Snap the measured scalar to the nearest 2d-th root of unity.
      const double angle = std::arg(prod.coef[0]);
      long long s = std::llround(angle * t.dim.d / std::numbers::pi);
      s = ((s % (2LL * t.dim.d)) + 2LL * t.dim.d) % (2LL * t.dim.d);
      if (std::abs(prod.coef[0] - tau_power(s, t.dim)) < opts.tol_algebra) {
        v.scalar_product = true;
        v.quantum_phase = make_phase(static_cast<int>(s), t.dim);
      }
    }
    if (!v.scalar_product && v.failure_witness.empty()) {
      v.failure_witness = "product of the lines is not a scalar";
    }
  }

  v.classical_forced = check_classical_forced(t);
  if (!v.classical_forced && v.failure_witness.empty()) {
    if (auto col = first_unforced_column(t)) {
      v.failure_witness = "column " + std::to_string(col->first + 1) + " does not force " +
                          std::string(1, base_char(col->second)) + " values";
    }
  }

  v.is_paradox = v.commuting && v.scalar_product && v.classical_forced &&
                 v.quantum_phase && v.quantum_phase->s != 0;
  if (!v.is_paradox && v.failure_witness.empty() && v.quantum_phase && v.quantum_phase->s == 0) {
    v.failure_witness = "product is +identity; no contradiction";
  }
  return v;
}

}  // namespace ghz
