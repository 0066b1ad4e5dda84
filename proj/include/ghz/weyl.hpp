#pragma once
// Phase-tracked algebra of generalized Pauli operators on a d-level system.
//
// Everything in this module is a monomial
//
//     tau^s * X^x * Z^z,      tau = e^{i*pi/d},
//
// where X|k> = |k+1 mod d> is the cyclic shift, Z|k> = omega^k |k> is the
// clock (omega = e^{2*pi*i/d} = tau^2), and the scalar prefactor is tracked
// as the integer exponent s modulo 2d.  Keeping s modulo 2d rather than d is
// what lets the algebra stay exact for even d, where the Y operator carries
// the half-phase tau = e^{i*pi/d}:
//
//     Y = tau^p * X^{d-1} * Z,      p = 1 for even d, p = 0 for odd d,
//
// so that X*Y = tau^p * Z and X^d = Y^d = Z^d = identity hold on the nose.
// All products, powers, inverses and commutation phases reduce to integer
// arithmetic; floating point only appears in the dense-matrix oracle.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghz {

using Cx = std::complex<double>;

// Thrown when an operation would exceed the configured dense-matrix or
// enumeration budget; the CLI maps it to its own exit code.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Qudit dimension d >= 2.
struct Dimension {
  int d = 2;

  Dimension() = default;
  explicit Dimension(int dd) : d(dd) {
    if (d < 2) throw std::invalid_argument("Dimension: d must be >= 2, got " + std::to_string(d));
  }
  bool even() const { return d % 2 == 0; }
  // Parity exponent p of Y's prefactor tau^p: 1 for even d, 0 for odd d.
  int parity() const { return even() ? 1 : 0; }

  friend bool operator==(const Dimension& a, const Dimension& b) { return a.d == b.d; }
  friend bool operator!=(const Dimension& a, const Dimension& b) { return a.d != b.d; }
};

// Non-negative residue of a modulo m (m > 0).
inline long long mod_reduce(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Scalar prefactor exponent: the value e^{i*pi*s/d}, with 0 <= s < 2d.
struct PhaseExp {
  int s = 0;

  friend bool operator==(const PhaseExp& a, const PhaseExp& b) { return a.s == b.s; }
  friend bool operator!=(const PhaseExp& a, const PhaseExp& b) { return a.s != b.s; }
};

inline PhaseExp make_phase(long long s, Dimension dim) {
  return PhaseExp{static_cast<int>(mod_reduce(s, 2LL * dim.d))};
}

inline PhaseExp phase_mul(PhaseExp a, PhaseExp b, Dimension dim) {
  return make_phase(static_cast<long long>(a.s) + b.s, dim);
}

// Numeric value e^{i*pi*s/d}.
inline Cx phase_value(PhaseExp p, Dimension dim) {
  const double pi = 3.14159265358979323846;
  double t = pi * static_cast<double>(p.s) / static_cast<double>(dim.d);
  return Cx(std::cos(t), std::sin(t));
}

// One single-qudit operator tau^s X^x Z^z with 0 <= x,z < d, 0 <= s < 2d.
struct Monomial {
  PhaseExp phase;
  int x = 0;
  int z = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.phase == b.phase && a.x == b.x && a.z == b.z;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

inline Monomial make_monomial(long long s, long long x, long long z, Dimension dim) {
  return Monomial{make_phase(s, dim), static_cast<int>(mod_reduce(x, dim.d)),
                  static_cast<int>(mod_reduce(z, dim.d))};
}

inline Monomial monomial_identity() { return Monomial{}; }

inline bool is_identity(const Monomial& m) { return m.phase.s == 0 && m.x == 0 && m.z == 0; }
inline bool is_scalar(const Monomial& m) { return m.x == 0 && m.z == 0; }

// The three generators in canonical form.
inline Monomial x_op() { return Monomial{PhaseExp{0}, 1, 0}; }
inline Monomial z_op() { return Monomial{PhaseExp{0}, 0, 1}; }
// Y = tau^p X^{d-1} Z, reconstructed from X*Y = tau^p Z.
inline Monomial y_op(Dimension dim) { return Monomial{PhaseExp{dim.parity()}, dim.d - 1, 1}; }

// Product. Reordering Z^{z1} past X^{x2} costs omega^{x2*z1} = tau^{2*x2*z1};
// the X and Z exponents then add modulo d with no extra phase (X^d = Z^d = 1).
inline Monomial monomial_mul(const Monomial& a, const Monomial& b, Dimension dim) {
  long long s = static_cast<long long>(a.phase.s) + b.phase.s + 2LL * b.x * a.z;
  return make_monomial(s, static_cast<long long>(a.x) + b.x, static_cast<long long>(a.z) + b.z, dim);
}

// k-th power by the closed form m^k = tau^{k*s + k(k-1)*x*z} X^{k*x} Z^{k*z}
// (k >= 0); agrees with repeated monomial_mul.
inline Monomial monomial_pow(const Monomial& m, long long k, Dimension dim) {
  if (k < 0) throw std::invalid_argument("monomial_pow: exponent must be >= 0");
  long long s = k * m.phase.s + k * (k - 1) % (2LL * dim.d) * m.x % (2LL * dim.d) * m.z;
  return make_monomial(s, k % dim.d * m.x, k % dim.d * m.z, dim);
}

// Unique m' with m * m' = m' * m = identity.
inline Monomial monomial_inverse(const Monomial& m, Dimension dim) {
  int xi = static_cast<int>(mod_reduce(-m.x, dim.d));
  int zi = static_cast<int>(mod_reduce(-m.z, dim.d));
  long long s = -static_cast<long long>(m.phase.s) - 2LL * xi * m.z;
  return make_monomial(s, xi, zi, dim);
}

// kappa with a * b = omega^kappa * b * a, i.e. kappa = x_b*z_a - x_a*z_b mod d.
// It is antisymmetric and bilinear in the (x, z) vectors and independent of
// the phases; kappa = 0 exactly when the two operators commute.
inline int commutation_exponent(const Monomial& a, const Monomial& b, Dimension dim) {
  return static_cast<int>(
      mod_reduce(static_cast<long long>(b.x) * a.z - static_cast<long long>(a.x) * b.z, dim.d));
}

inline std::string to_string(const Monomial& m, Dimension dim) {
  std::string out = "tau^" + std::to_string(m.phase.s) + " X^" + std::to_string(m.x) + " Z^" +
                    std::to_string(m.z) + " (d=" + std::to_string(dim.d) + ")";
  return out;
}

// An M-party tensor product of monomials. Part phases are kept inside the
// parts; the total scalar prefactor is their sum modulo 2d.
struct TensorMonomial {
  Dimension dim;
  std::vector<Monomial> parts;

  int parties() const { return static_cast<int>(parts.size()); }

  friend bool operator==(const TensorMonomial& a, const TensorMonomial& b) {
    return a.dim == b.dim && a.parts == b.parts;
  }
  friend bool operator!=(const TensorMonomial& a, const TensorMonomial& b) { return !(a == b); }
};

inline TensorMonomial tensor_identity(Dimension dim, int parties) {
  if (parties < 1) throw std::invalid_argument("tensor_identity: need at least one party");
  return TensorMonomial{dim, std::vector<Monomial>(static_cast<size_t>(parties))};
}

inline void require_same_shape(const TensorMonomial& a, const TensorMonomial& b,
                               const char* where) {
  if (a.dim != b.dim || a.parts.size() != b.parts.size())
    throw std::invalid_argument(std::string(where) + ": operands live on different systems");
}

// Partywise product (tensor factors multiply independently).
inline TensorMonomial tensor_mul(const TensorMonomial& a, const TensorMonomial& b) {
  require_same_shape(a, b, "tensor_mul");
  TensorMonomial out{a.dim, {}};
  out.parts.reserve(a.parts.size());
  for (size_t i = 0; i < a.parts.size(); ++i)
    out.parts.push_back(monomial_mul(a.parts[i], b.parts[i], a.dim));
  return out;
}

// Sum of partywise commutation exponents: a * b = omega^kappa * b * a.
inline int tensor_commutation_exponent(const TensorMonomial& a, const TensorMonomial& b) {
  require_same_shape(a, b, "tensor_commutation_exponent");
  long long kappa = 0;
  for (size_t i = 0; i < a.parts.size(); ++i)
    kappa += commutation_exponent(a.parts[i], b.parts[i], a.dim);
  return static_cast<int>(mod_reduce(kappa, a.dim.d));
}

inline bool tensor_commute(const TensorMonomial& a, const TensorMonomial& b) {
  return tensor_commutation_exponent(a, b) == 0;
}

inline bool is_scalar(const TensorMonomial& t) {
  for (const Monomial& m : t.parts)
    if (!is_scalar(m)) return false;
  return true;
}

// Total scalar prefactor (sum of part phases); equals the full scalar value
// exactly when is_scalar(t).
inline PhaseExp global_phase(const TensorMonomial& t) {
  long long s = 0;
  for (const Monomial& m : t.parts) s += m.phase.s;
  return make_phase(s, t.dim);
}

}  // namespace ghz
