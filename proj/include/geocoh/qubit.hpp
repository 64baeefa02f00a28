#pragma once

// Qubit linear algebra: 2x2 complex matrices, kets, density matrices and
// orthonormal bases. All types validate on construction and are immutable.

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace geocoh {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double kNorm = 1e-9;
inline constexpr double kHermitian = 1e-9;
inline constexpr double kOrtho = 1e-9;
inline constexpr double kPsd = 1e-10;
inline constexpr double kRecon = 1e-10;
}  // namespace tol

// Error hierarchy. Every failure raised by the library derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NonFiniteInput : public Error {
 public:
  using Error::Error;
};
class NonHermitianInput : public Error {
 public:
  using Error::Error;
};
class NotPositiveSemidefinite : public Error {
 public:
  using Error::Error;
};
class NotNormalized : public Error {
 public:
  using Error::Error;
};
class InvalidState : public Error {
 public:
  using Error::Error;
};
class InvalidBasis : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class NumericalDomainError : public Error {
 public:
  using Error::Error;
};

// Clamp counters. Every one-sided clamp that absorbs round-off increments the
// matching counter so callers can see how often it happened.
enum class ClampSite : int {
  kEigenvalue = 0,
  kPurity,
  kOverlap,
  kFidelity,
  kCoherenceRadicand,
  kIncompatibility,
  kErrorProbability,
  kCount_
};

struct DiagnosticsSnapshot {
  std::array<std::uint64_t, static_cast<int>(ClampSite::kCount_)> clamps{};
  std::uint64_t total() const;
};

void note_clamp(ClampSite site) noexcept;
DiagnosticsSnapshot diagnostics() noexcept;
void reset_diagnostics() noexcept;
const char* clamp_site_name(ClampSite site) noexcept;

class Matrix2 {
 public:
  Matrix2() = default;
  Matrix2(Complex m00, Complex m01, Complex m10, Complex m11);

  static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Matrix2 diagonal(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }

  const Complex& operator()(int row, int col) const { return e_[row * 2 + col]; }

  Matrix2 adjoint() const;
  Complex trace() const { return e_[0] + e_[3]; }
  Complex determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  // Largest absolute entry.
  double max_abs() const;
  // max |m - m^dagger| entrywise.
  double hermiticity_defect() const;

  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(Complex s, const Matrix2& a);

 private:
  std::array<Complex, 4> e_{};
};

class PureKet {
 public:
  // Throws NotNormalized if | <psi|psi> - 1 | > tol::kNorm.
  PureKet(Complex a0, Complex a1);

  // Normalizes an arbitrary nonzero vector; throws DomainError on zero input.
  static PureKet normalized(Complex a0, Complex a1);
  static PureKet zero() { return {1.0, 0.0}; }
  static PureKet one() { return {0.0, 1.0}; }

  const Complex& operator[](int i) const { return amp_[i]; }

  // Same ray with the first nonzero amplitude made real positive.
  PureKet phase_fixed() const;
  // |psi><psi|
  Matrix2 projector() const;
  // Bloch vector of the projector.
  std::array<double, 3> bloch() const;

 private:
  std::array<Complex, 2> amp_;
};

Complex inner(const PureKet& a, const PureKet& b);
// <a| m |b>
Complex sandwich(const PureKet& a, const Matrix2& m, const PureKet& b);
PureKet apply(const Matrix2& m, const PureKet& v);

// |<a|b>|^2 clamped to [0, 1].
double overlap2(const PureKet& a, const PureKet& b);

class QubitState {
 public:
  // Validates hermiticity, unit trace and positivity. Throws InvalidState.
  explicit QubitState(const Matrix2& m);

  // rho = (I + r.sigma)/2, requires |r| <= 1 + tol::kNorm.
  static QubitState from_bloch(double x, double y, double z);
  static QubitState from_ket(const PureKet& psi);
  static QubitState maximally_mixed();
  // (1 - q)/2 I + q |+><+|, q in [0, 1].
  static QubitState maximally_coherent_mixed(double q);

  const Matrix2& matrix() const { return m_; }
  std::array<double, 3> bloch() const;

 private:
  Matrix2 m_;
};

class OrthonormalBasis {
 public:
  // Throws InvalidBasis if the kets are not orthogonal within tol::kOrtho.
  OrthonormalBasis(PureKet first, PureKet second);

  static OrthonormalBasis computational();
  // Completes psi with its orthogonal partner (-conj(b), conj(a)).
  static OrthonormalBasis completed(const PureKet& psi);

  const PureKet& operator[](int i) const { return i == 0 ? k0_ : k1_; }
  OrthonormalBasis swapped() const { return {k1_, k0_}; }

 private:
  PureKet k0_;
  PureKet k1_;
};

struct Eigensystem2 {
  std::array<double, 2> values;  // descending
  std::array<PureKet, 2> vectors;

  Matrix2 reconstruct() const;
};

// Closed-form eigendecomposition of a 2x2 Hermitian matrix. Degenerate input
// returns the computational basis. Throws NonHermitianInput.
Eigensystem2 eig_hermitian_2x2(const Matrix2& m);

// Hermitian square root. Eigenvalues in [-tol::kPsd, 0) are clamped to zero.
// Throws NotPositiveSemidefinite below that.
Matrix2 matrix_sqrt_psd(const Matrix2& m);

// tr(rho^2), clamped to [1/2, 1].
double purity(const QubitState& rho);

// <x|rho|x> as a real number.
double expectation(const QubitState& rho, const PureKet& x);

double max_abs_diff(const Matrix2& a, const Matrix2& b);

}  // namespace geocoh
