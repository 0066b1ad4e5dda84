#pragma once
// Probe matrices for the tests, built from the defining formulas on basis
// kets, independently of the library's own matrix builders.  Agreement of
// the symbolic algebra (weyl.hpp), the library oracle (oracle.hpp), and
// these probes is a genuine three-way cross-check.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "ghz/table.hpp"
#include "ghz/weyl.hpp"

namespace probe {

using Mat = Eigen::MatrixXcd;
using ghz::Cx;

inline Cx tau_pow(long long s, int d) {
  const double angle = std::numbers::pi * static_cast<double>(s) / d;
  return Cx(std::cos(angle), std::sin(angle));
}

inline Mat eye(int d) { return Mat::Identity(d, d); }

// X|k> = |k+1 mod d>
inline Mat shift(int d) {
  Mat m = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) m((k + 1) % d, k) = 1.0;
  return m;
}

// Z|k> = omega^k |k>
inline Mat clock(int d) {
  Mat m = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) m(k, k) = tau_pow(2LL * k, d);
  return m;
}

inline Mat matpow(const Mat& m, int k) {
  Mat r = eye(static_cast<int>(m.rows()));
  for (int i = 0; i < k; ++i) r = m * r;
  return r;
}

// Y = tau^parity(d) X^{d-1} Z
inline Mat y_matrix(int d) {
  return tau_pow(d % 2 == 0 ? 1 : 0, d) * matpow(shift(d), d - 1) * clock(d);
}

inline Mat word(const ghz::EntryWord& w, int d) {
  switch (w.base) {
    case ghz::Base::I: return eye(d);
    case ghz::Base::X: return matpow(shift(d), w.exp);
    case ghz::Base::Y: return matpow(y_matrix(d), w.exp);
    case ghz::Base::Z: return matpow(clock(d), w.exp);
  }
  return eye(d);
}

// tau^s X^x Z^z
inline Mat monomial(const ghz::Monomial& m, int d) {
  return tau_pow(m.phase.s, d) * matpow(shift(d), m.x) * matpow(clock(d), m.z);
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat tensor(const ghz::TensorMonomial& t) {
  Mat m = monomial(t.parts[0], t.dim.d);
  for (size_t j = 1; j < t.parts.size(); ++j) m = kron(m, monomial(t.parts[j], t.dim.d));
  return m;
}

inline Mat row(const ghz::ParadoxTable& t, int r) {
  Mat m = word(t.rows[r][0], t.dim.d);
  for (int j = 1; j < t.parties; ++j) m = kron(m, word(t.rows[r][j], t.dim.d));
  return m;
}

inline double distance(const Mat& a, const Mat& b) { return (a - b).norm(); }

inline bool close(const Mat& a, const Mat& b, double tol = 1e-10) {
  return a.rows() == b.rows() && a.cols() == b.cols() && distance(a, b) < tol;
}

// Deterministic RNG for reproducible randomized suites.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline ghz::Monomial random_monomial(ghz::Dimension dim) {
  std::uniform_int_distribution<int> phase(0, 2 * dim.d - 1);
  std::uniform_int_distribution<int> exp(0, dim.d - 1);
  return ghz::make_monomial(phase(rng()), exp(rng()), exp(rng()), dim);
}

}  // namespace probe
