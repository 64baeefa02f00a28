#include "geocoh/qubit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace geocoh {

namespace {

std::array<std::atomic<std::uint64_t>, static_cast<int>(ClampSite::kCount_)> g_clamps{};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Eigenvalue splitting below which a Hermitian matrix is treated as a multiple
// of the identity.
constexpr double kDegenerateSplit = 1e-15;

}  // namespace

std::uint64_t DiagnosticsSnapshot::total() const {
  std::uint64_t sum = 0;
  for (auto c : clamps) sum += c;
  return sum;
}

void note_clamp(ClampSite site) noexcept {
  g_clamps[static_cast<int>(site)].fetch_add(1, std::memory_order_relaxed);
}

DiagnosticsSnapshot diagnostics() noexcept {
  DiagnosticsSnapshot snap;
  for (std::size_t i = 0; i < g_clamps.size(); ++i)
    snap.clamps[i] = g_clamps[i].load(std::memory_order_relaxed);
  return snap;
}

void reset_diagnostics() noexcept {
  for (auto& c : g_clamps) c.store(0, std::memory_order_relaxed);
}

const char* clamp_site_name(ClampSite site) noexcept {
  switch (site) {
    case ClampSite::kEigenvalue: return "eigenvalue";
    case ClampSite::kPurity: return "purity";
    case ClampSite::kOverlap: return "overlap";
    case ClampSite::kFidelity: return "fidelity";
    case ClampSite::kCoherenceRadicand: return "coherence_radicand";
    case ClampSite::kIncompatibility: return "incompatibility";
    case ClampSite::kErrorProbability: return "error_probability";
    case ClampSite::kCount_: break;
  }
  return "unknown";
}

// ---------------------------------------------------------------- Matrix2

Matrix2::Matrix2(Complex m00, Complex m01, Complex m10, Complex m11) : e_{m00, m01, m10, m11} {
  for (const auto& z : e_)
    if (!finite(z)) throw NonFiniteInput("matrix entry is not finite");
}

Matrix2 Matrix2::adjoint() const {
  return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

double Matrix2::max_abs() const {
  double m = 0.0;
  for (const auto& z : e_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix2::hermiticity_defect() const { return max_abs_diff(*this, adjoint()); }

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Matrix2 operator*(Complex s, const Matrix2& a) {
  return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) { return (a - b).max_abs(); }

// ---------------------------------------------------------------- PureKet

PureKet::PureKet(Complex a0, Complex a1) : amp_{a0, a1} {
  if (!finite(a0) || !finite(a1)) throw NonFiniteInput("ket amplitude is not finite");
  const double n = std::norm(a0) + std::norm(a1);
  if (std::abs(n - 1.0) > tol::kNorm)
    throw NotNormalized("ket is not normalized: <psi|psi> = " + std::to_string(n));
}

PureKet PureKet::normalized(Complex a0, Complex a1) {
  if (!finite(a0) || !finite(a1)) throw NonFiniteInput("ket amplitude is not finite");
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (!(n > 0.0)) throw DomainError("cannot normalize the zero vector");
  return {a0 / n, a1 / n};
}

PureKet PureKet::phase_fixed() const {
  const int lead = std::abs(amp_[0]) > 0.0 ? 0 : 1;
  const double mag = std::abs(amp_[lead]);
  const Complex phase = std::conj(amp_[lead]) / mag;
  Complex a0 = amp_[0] * phase;
  Complex a1 = amp_[1] * phase;
  // The leading amplitude is real by construction; drop its residual imaginary part.
  if (lead == 0)
    a0 = {mag, 0.0};
  else
    a1 = {mag, 0.0};
  return {a0, a1};
}

Matrix2 PureKet::projector() const {
  return {std::norm(amp_[0]), amp_[0] * std::conj(amp_[1]), amp_[1] * std::conj(amp_[0]),
          std::norm(amp_[1])};
}

std::array<double, 3> PureKet::bloch() const {
  const Complex c = std::conj(amp_[0]) * amp_[1];
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(amp_[0]) - std::norm(amp_[1])};
}

Complex inner(const PureKet& a, const PureKet& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Complex sandwich(const PureKet& a, const Matrix2& m, const PureKet& b) {
  const Complex mb0 = m(0, 0) * b[0] + m(0, 1) * b[1];
  const Complex mb1 = m(1, 0) * b[0] + m(1, 1) * b[1];
  return std::conj(a[0]) * mb0 + std::conj(a[1]) * mb1;
}

PureKet apply(const Matrix2& m, const PureKet& v) {
  return PureKet::normalized(m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]);
}

double overlap2(const PureKet& a, const PureKet& b) {
  const double v = std::norm(inner(a, b));
  if (v > 1.0) {
    note_clamp(ClampSite::kOverlap);
    return 1.0;
  }
  return v;
}

// ---------------------------------------------------------------- QubitState

QubitState::QubitState(const Matrix2& m) {
  const double herm = m.hermiticity_defect();
  if (herm > tol::kHermitian)
    throw InvalidState("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol::kNorm)
    throw InvalidState("density matrix trace is not 1 (trace " + std::to_string(tr) + ")");
  // Store the exactly Hermitian part.
  const Complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  m_ = Matrix2(m(0, 0).real(), off, std::conj(off), m(1, 1).real());
  const auto es = eig_hermitian_2x2(m_);
  if (es.values[1] < -tol::kPsd)
    throw InvalidState("density matrix is not positive semidefinite (min eigenvalue " +
                       std::to_string(es.values[1]) + ")");
}

QubitState QubitState::from_bloch(double x, double y, double z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
    throw NonFiniteInput("Bloch vector is not finite");
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r > 1.0 + tol::kNorm)
    throw InvalidState("Bloch vector length exceeds 1 (|r| = " + std::to_string(r) + ")");
  return QubitState(Matrix2(0.5 * (1.0 + z), Complex(0.5 * x, -0.5 * y), Complex(0.5 * x, 0.5 * y),
                            0.5 * (1.0 - z)));
}

QubitState QubitState::from_ket(const PureKet& psi) { return QubitState(psi.projector()); }

QubitState QubitState::maximally_mixed() { return QubitState(Matrix2::diagonal(0.5, 0.5)); }

QubitState QubitState::maximally_coherent_mixed(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q must lie in [0, 1]");
  return QubitState(Matrix2(0.5, 0.5 * q, 0.5 * q, 0.5));
}

std::array<double, 3> QubitState::bloch() const {
  return {2.0 * m_(0, 1).real(), -2.0 * m_(0, 1).imag(), m_(0, 0).real() - m_(1, 1).real()};
}

// ---------------------------------------------------------------- OrthonormalBasis

OrthonormalBasis::OrthonormalBasis(PureKet first, PureKet second) : k0_(first), k1_(second) {
  const double ov = std::abs(inner(k0_, k1_));
  if (ov > tol::kOrtho)
    throw InvalidBasis("basis kets are not orthogonal (|<k1|k2>| = " + std::to_string(ov) + ")");
}

OrthonormalBasis OrthonormalBasis::computational() { return {PureKet::zero(), PureKet::one()}; }

OrthonormalBasis OrthonormalBasis::completed(const PureKet& psi) {
  return {psi, PureKet(-std::conj(psi[1]), std::conj(psi[0]))};
}

// ---------------------------------------------------------------- spectral

Matrix2 Eigensystem2::reconstruct() const {
  return Complex(values[0]) * vectors[0].projector() + Complex(values[1]) * vectors[1].projector();
}

Eigensystem2 eig_hermitian_2x2(const Matrix2& m) {
  const double herm = m.hermiticity_defect();
  if (herm > tol::kHermitian)
    throw NonHermitianInput("matrix is not Hermitian (defect " + std::to_string(herm) + ")");

  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double mean = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  const double bmag = std::abs(b);
  const double split = std::hypot(half_diff, bmag);

  if (split <= kDegenerateSplit)
    return {{mean + split, mean - split}, {PureKet::zero(), PureKet::one()}};

  // Top eigenvector (c, e^{i phi} s) with e^{i phi} = conj(b)/|b|; c and s are
  // chosen so that neither is formed by cancellation.
  double c = 0.0;
  double s = 0.0;
  if (half_diff >= 0.0) {
    c = std::sqrt((split + half_diff) / (2.0 * split));
    s = bmag / (2.0 * split * c);
  } else {
    s = std::sqrt((split - half_diff) / (2.0 * split));
    c = bmag / (2.0 * split * s);
  }
  const Complex phase = bmag > 0.0 ? std::conj(b) / bmag : Complex(1.0);
  const PureKet top = PureKet::normalized(c, phase * s).phase_fixed();
  const PureKet bottom = PureKet::normalized(s, -phase * c).phase_fixed();
  return {{mean + split, mean - split}, {top, bottom}};
}

Matrix2 matrix_sqrt_psd(const Matrix2& m) {
  const auto es = eig_hermitian_2x2(m);
  std::array<double, 2> roots{};
  for (int i = 0; i < 2; ++i) {
    double v = es.values[i];
    if (v < -tol::kPsd)
      throw NotPositiveSemidefinite("matrix has eigenvalue " + std::to_string(v) + " < 0");
    if (v < 0.0) {
      note_clamp(ClampSite::kEigenvalue);
      v = 0.0;
    }
    roots[i] = std::sqrt(v);
  }
  return Complex(roots[0]) * es.vectors[0].projector() +
         Complex(roots[1]) * es.vectors[1].projector();
}

double purity(const QubitState& rho) {
  const Matrix2& m = rho.matrix();
  const double p = std::norm(m(0, 0)) + std::norm(m(1, 1)) + 2.0 * std::norm(m(0, 1));
  if (p < 0.5) {
    note_clamp(ClampSite::kPurity);
    return 0.5;
  }
  if (p > 1.0) {
    note_clamp(ClampSite::kPurity);
    return 1.0;
  }
  return p;
}

double expectation(const QubitState& rho, const PureKet& x) {
  return sandwich(x, rho.matrix(), x).real();
}

}  // namespace geocoh
