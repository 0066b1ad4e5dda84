#pragma once
// Dense-matrix ground truth for the symbolic algebra.
//
// All operators here are built from first principles — the shift, clock and
// Y matrices are written down from their defining actions on basis kets and
// raised to powers numerically — so agreement with the monomial algebra is a
// real check, not a tautology.  Multiparty operators are Kronecker products
// with party 0 the most significant index.
//
// Every operator of interest is a generalized permutation matrix (one
// nonzero per column), which the verification routines exploit: products
// and commutator norms of N x N rows cost O(N), so the full-matrix checks
// stay exact but scale to the capacity bound.  The N x N matrices returned
// by the public builders are plain dense Eigen matrices.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "ghz/table.hpp"

namespace ghz {

using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

struct OracleOptions {
  long long capacity = 0;      // 0 = use default_capacity()
  double tol_algebra = 1e-10;  // products, commutators, scalar identification
  double tol_eigen = 1e-9;     // eigenvalue relations
  double tol_basis = 1e-8;     // joint-eigenbasis orthonormality/completeness
};

// Default total-dimension bound N = d^M; overridable with the environment
// variable GHZKIT_CAPACITY.
long long default_capacity();

// d^M, throwing capacity_error when it exceeds the bound in effect.
long long checked_total_dimension(Dimension dim, int parties, const OracleOptions& opts = {});

// Single-party builders.
DenseOperator base_matrix(Base b, Dimension dim);              // X, Y, Z, I from definitions
DenseOperator word_matrix(const EntryWord& w, Dimension dim);  // base_matrix^exp
DenseOperator monomial_matrix(const Monomial& m, Dimension dim);  // tau^s X^x Z^z

// Kronecker product, left factor most significant.
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

// N x N matrix of one table line (capacity-checked).
DenseOperator row_matrix(const ParadoxTable& t, int row, const OracleOptions& opts = {});

// GHZ-type state sum_k tau^{profile(k)} |k,k,...,k> / sqrt(d); an empty
// profile means all exponents zero (the flat state).
StateVector ghz_state(Dimension dim, int parties, const std::vector<int>& profile = {},
                      const OracleOptions& opts = {});

// Applies one table line to a state without forming the N x N matrix
// (per-party d x d actions on the amplitude tensor).
StateVector apply_row(const ParadoxTable& t, int row, const StateVector& psi);

// <psi|A|psi> when psi is an eigenvector of A within tol (|A psi - lambda
// psi| < tol); nullopt otherwise.
std::optional<Cx> eigenvalue_on(const DenseOperator& a, const StateVector& psi,
                                double tol = 1e-9);
// Same, with the line applied in factored form.
std::optional<Cx> row_eigenvalue_on(const ParadoxTable& t, int row, const StateVector& psi,
                                    double tol = 1e-9);

struct JointBasis {
  std::vector<StateVector> vectors;               // orthonormal, N of them
  std::vector<std::vector<Cx>> eigenvalues;       // eigenvalues[v][row]
};

// Simultaneous eigenbasis of all (commuting) lines.  Deterministic: the
// space is refined line by line, splitting each current block by the
// eigenvalues of the Hermitian and anti-Hermitian parts of the restricted
// line; no randomized combinations.  Each vector's phase is normalized so
// its first nonvanishing amplitude is positive real.
JointBasis joint_eigenbasis(const ParadoxTable& t, const OracleOptions& opts = {});

// Numeric replication of verify(): commutator norms, ordered product versus
// a scalar multiple of the identity (phase snapped to the tau lattice), and
// the columnwise forcing condition.  Works at any N up to the capacity.
Verdict oracle_verify(const ParadoxTable& t, const OracleOptions& opts = {});

}  // namespace ghz
