#pragma once

#include <cmath>
#include <cstdint>

#include "geocoh/qubit.hpp"
#include "geocoh/sampling.hpp"

namespace geocoh::testing {

inline constexpr double kPi = 3.14159265358979323846;

// Seeded stream for sample i of a test, independent of the campaign streams.
inline sampling::Xoshiro256 stream(std::uint64_t test_seed, std::uint64_t i) {
  return sampling::Xoshiro256(sampling::derive_seed(test_seed, i));
}

// Haar-random 2x2 unitary whose columns are a random basis.
inline Matrix2 unitary_from(const OrthonormalBasis& b) {
  return {b[0][0], b[1][0], b[0][1], b[1][1]};
}

inline PureKet transform(const Matrix2& u, const PureKet& v) {
  return PureKet(u(0, 0) * v[0] + u(0, 1) * v[1], u(1, 0) * v[0] + u(1, 1) * v[1]);
}

inline OrthonormalBasis transform(const Matrix2& u, const OrthonormalBasis& b) {
  return {transform(u, b[0]), transform(u, b[1])};
}

inline QubitState conjugate(const Matrix2& u, const QubitState& rho) {
  return QubitState(u * rho.matrix() * u.adjoint());
}

// Random Hermitian PSD matrix: a random state scaled into (0, 3].
inline Matrix2 random_psd(sampling::Xoshiro256& rng) {
  const QubitState rho = sampling::sample_state(rng, sampling::Family::kUniformBlochBall);
  const double scale = 3.0 * (1.0 - rng.uniform());
  return Complex(scale) * rho.matrix();
}

// Density matrix written out entry by entry from a Bloch vector.
inline Matrix2 bloch_matrix(double x, double y, double z) {
  return {0.5 * (1.0 + z), Complex(0.5 * x, -0.5 * y), Complex(0.5 * x, 0.5 * y), 0.5 * (1.0 - z)};
}

// Closed forms for rho_m = (1 - q)/2 I + q |+><+|, purity (1 + q^2)/2.

// C_g in the computational (or circular) basis.
inline double mcm_coherence(double q) { return 0.5 * (1.0 - std::sqrt(1.0 - q * q)); }

// C_g in the basis {(|0> + 2|1>)/sqrt5, (-2|0> + |1>)/sqrt5}.
inline double mcm_ex2y_coherence(double q) { return 0.5 * (1.0 - std::sqrt(1.0 - 9.0 * q * q / 25.0)); }

// Two-basis lower bound at incompatibility 9/10.
inline double mcm_bound_c910(double q) {
  return 0.5 * (1.0 - std::sqrt(1.0 + 6.0 * (3.0 - std::sqrt(10.0)) * q * q / 5.0));
}

// Two-basis lower bound at incompatibility 1/2.
inline double mcm_bound_c12(double q) {
  return 0.5 * (1.0 - std::sqrt(1.0 + 2.0 * q * q * (1.0 - std::sqrt(2.0))));
}

// Three-basis lower bound for incompatibility vector (9/10, 4/5, 1/2).
inline double mcm_three_basis_bound(double q) {
  const double a = std::sqrt(1.0 + 6.0 * (3.0 - std::sqrt(10.0)) * q * q / 5.0);
  const double b = std::sqrt(
      1.0 + 2.0 * (14.0 - 6.0 * std::sqrt(5.0) - 3.0 * std::sqrt(10.0) + 5.0 * std::sqrt(2.0)) * q * q / 5.0);
  return 1.0 - 0.5 * (a + b);
}

// Right side of the purity ceiling summed over two bases.
inline double mcm_two_basis_ceiling(double q) { return 1.0 - std::sqrt(1.0 - q * q); }

}  // namespace geocoh::testing
