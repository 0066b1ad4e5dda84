#pragma once
// Local-hidden-variable analysis: can classical values reproduce the
// quantum eigenvalue pattern of a table?
//
// A noncontextual model assigns each (party, base) that occurs in the table
// an integer v mod d, the measured outcome being omega^v.  Line r with
// target mu_r then demands the linear congruence
//
//     sum over its entries  exp * v(party, base)  ==  mu_r   (mod d).
//
// The system is decided exactly over the integers: a Smith-normal-form
// reduction either produces a solution vector or an explicit refutation
// certificate y with y . A == 0 (mod d) but y . mu != 0 (mod d) — a linear
// combination of the lines that any value assignment satisfies identically
// while the targets do not.  A brute-force counter is provided as an
// independent cross-check at small sizes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghz/oracle.hpp"
#include "ghz/table.hpp"

namespace ghz {

struct AssignmentSystem {
  Dimension dim;
  std::vector<std::pair<int, Base>> variables;  // (party, base), party-major order
  std::vector<std::vector<int>> coeffs;         // lines x variables, mod d
  std::vector<int> targets;                     // mod d
};

// One variable per (party, base) pair that occurs with nonzero exponent.
// targets[r] is the exponent of omega in line r's required eigenvalue.
AssignmentSystem build_system(const ParadoxTable& t, const std::vector<int>& targets);

// Targets read off a joint eigenstate: each line's eigenvalue on psi is
// snapped to omega^mu.  Throws when psi is not an eigenstate of some line
// or an eigenvalue is not a d-th root of unity.
std::vector<int> eigen_targets(const ParadoxTable& t, const StateVector& psi,
                               const OracleOptions& opts = {});

// State-independent targets for a scalar-product table: the product of all
// lines being tau^s * identity with s even forces the product of any joint
// eigenvalue pattern to omega^{s/2}, so (0, ..., 0, s/2 mod d) is a valid
// pattern demand.  nullopt when the product is not a scalar or s is odd.
std::optional<std::vector<int>> ks_targets(const ParadoxTable& t);

struct Refutation {
  std::vector<int> y;  // y . coeffs == 0 (mod d), y . targets != 0 (mod d)
  int combined_target = 0;  // y . targets mod d (nonzero)
};

struct LhvResult {
  bool solvable = false;
  std::vector<int> assignment;        // values mod d, when solvable
  std::optional<Refutation> refutation;
};

// Exact decision.  When the all-ones combination already refutes (every
// variable cancels out of the summed system while the summed target is
// nonzero) that certificate is preferred, since it is the natural
// "multiply all lines together" argument; otherwise the certificate comes
// out of the Smith reduction.
LhvResult solve_or_refute(const AssignmentSystem& sys);

// Number of satisfying assignments by enumeration (guarded: d^#vars <= 1e8).
long long brute_force_count(const AssignmentSystem& sys);

// Human-readable forms.
std::string equation_string(const AssignmentSystem& sys, int row);
std::string render_certificate(const AssignmentSystem& sys, const Refutation& ref);

}  // namespace ghz
