#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geocoh/coherence.hpp"
#include "geocoh/specs.hpp"
#include "support.hpp"

using namespace geocoh;
using geocoh::testing::stream;

namespace {

const OrthonormalBasis kZ = OrthonormalBasis::computational();

// Pure-vs-mixed fidelity <psi|sigma|psi>, evaluated by hand.
double pure_fidelity(const PureKet& psi, const Matrix2& sigma) {
  return sandwich(psi, sigma, psi).real();
}

// Qubit identity F = tr(rho sigma) + 2 sqrt(det rho det sigma).
double qubit_fidelity(const QubitState& rho, const QubitState& sigma) {
  const double overlap = (rho.matrix() * sigma.matrix()).trace().real();
  const double dets = rho.matrix().determinant().real() * sigma.matrix().determinant().real();
  return overlap + 2.0 * std::sqrt(std::max(0.0, dets));
}

// Independent evaluation of the qubit closed form from the Bloch picture:
// C_g = (1 - sqrt(1 - r_perp^2)) / 2 with r_perp the Bloch component
// orthogonal to the basis axis.
double bloch_coherence(const QubitState& rho, const OrthonormalBasis& basis) {
  const auto r = rho.bloch();
  const auto n = basis[0].bloch();
  const double along = r[0] * n[0] + r[1] * n[1] + r[2] * n[2];
  const double r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
  const double perp2 = std::max(0.0, r2 - along * along);
  return 0.5 * (1.0 - std::sqrt(1.0 - perp2));
}

}  // namespace

TEST_CASE("fidelity examples") {
  const QubitState rho = QubitState::from_bloch(0.2, -0.3, 0.4);
  CHECK(std::abs(fidelity(rho, rho) - 1.0) < 1e-12);
  CHECK(fidelity(QubitState::from_ket(PureKet::zero()), QubitState::from_ket(PureKet::one())) < 1e-15);
  const PureKet plus = PureKet::normalized(1.0, 1.0);
  CHECK(std::abs(fidelity(QubitState::from_ket(plus), QubitState::maximally_mixed()) - 0.5) < 1e-12);
}

TEST_CASE("fidelity symmetry, bounds and pure-state form") {
  double worst_sym = 0.0, worst_pure = 0.0, worst_qubit = 0.0;
  bool bounded = true, identity_iff_equal = true;
  for (int i = 0; i < 10000; ++i) {
    auto rng = stream(201, i);
    const QubitState a = sampling::sample_state(rng, sampling::Family::kUniformBlochBall);
    const QubitState b = sampling::sample_state(rng, sampling::Family::kUniformBlochBall);
    const double fab = fidelity(a, b);
    const double fba = fidelity(b, a);
    bounded = bounded && fab >= 0.0 && fab <= 1.0;
    worst_sym = std::max(worst_sym, std::abs(fab - fba));
    worst_qubit = std::max(worst_qubit, std::abs(fab - qubit_fidelity(a, b)));
    if (fab == 1.0) identity_iff_equal = identity_iff_equal && max_abs_diff(a.matrix(), b.matrix()) < 1e-6;
    const PureKet psi = sampling::sample_pure(rng);
    worst_pure = std::max(worst_pure,
                          std::abs(fidelity(QubitState::from_ket(psi), b) - pure_fidelity(psi, b.matrix())));
  }
  CHECK(bounded);
  CHECK(identity_iff_equal);
  CHECK(worst_sym < 1e-10);
  CHECK(worst_qubit < 1e-10);
  // sqrt of a rank-one input amplifies its round-off
  CHECK(worst_pure < 1e-7);
}

TEST_CASE("geometric_coherence examples") {
  CHECK(geometric_coherence(QubitState(Matrix2::diagonal(0.7, 0.3)), kZ).value < 1e-15);
  const auto r = geometric_coherence(QubitState::maximally_coherent_mixed(0.6), kZ);
  CHECK(std::abs(r.value - 0.1) < 1e-15);
  CHECK(r.basis_diagonals[0] == 0.5);
  CHECK(r.basis_diagonals[1] == 0.5);
  const QubitState plus(Matrix2(0.5, 0.5, 0.5, 0.5));
  CHECK(geometric_coherence(plus, kZ).value == 0.5);
}

TEST_CASE("geometric_coherence matches the maximally coherent mixed family") {
  for (int k = 0; k <= 10; ++k) {
    const double q = k / 10.0;
    const double expected = (1.0 - std::sqrt(1.0 - q * q)) / 2.0;
    CHECK(std::abs(geometric_coherence(QubitState::maximally_coherent_mixed(q), kZ).value - expected) <
          1e-12);
  }
}

TEST_CASE("geometric_coherence range, diagonals and Bloch-picture agreement") {
  bool in_range = true, diag_ok = true;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    auto rng = stream(202, i);
    const QubitState rho = sampling::sample_state(rng, static_cast<sampling::Family>(i % 2));
    const OrthonormalBasis b = sampling::sample_basis(rng);
    const auto r = geometric_coherence(rho, b);
    in_range = in_range && r.value >= 0.0 && r.value <= 0.5 + tol::kPsd;
    diag_ok = diag_ok && std::abs(r.basis_diagonals[0] + r.basis_diagonals[1] - 1.0) <= tol::kNorm;
    worst = std::max(worst, std::abs(r.value - bloch_coherence(rho, b)));
  }
  CHECK(in_range);
  CHECK(diag_ok);
  CHECK(worst < 1e-10);
}

TEST_CASE("incoherent states have zero coherence") {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    auto rng = stream(203, i);
    const OrthonormalBasis b = sampling::sample_basis(rng);
    const double t = rng.uniform();
    const QubitState rho(Complex(t) * b[0].projector() + Complex(1.0 - t) * b[1].projector());
    worst = std::max(worst, geometric_coherence(rho, b).value);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("unitary covariance and basis-order invariance") {
  double worst = 0.0;
  bool order_exact = true;
  for (int i = 0; i < 10000; ++i) {
    auto rng = stream(204, i);
    const QubitState rho = sampling::sample_state(rng, sampling::Family::kUniformBlochBall);
    const OrthonormalBasis b = sampling::sample_basis(rng);
    const Matrix2 u = testing::unitary_from(sampling::sample_basis(rng));
    const double direct = geometric_coherence(rho, b).value;
    const double moved = geometric_coherence(testing::conjugate(u, rho), testing::transform(u, b)).value;
    worst = std::max(worst, std::abs(direct - moved));
    order_exact = order_exact && geometric_coherence(rho, b.swapped()).value == direct;
  }
  CHECK(worst < 1e-10);
  CHECK(order_exact);
}

TEST_CASE("oracle examples") {
  using verification::geometric_coherence_oracle;
  CHECK(geometric_coherence_oracle(QubitState(Matrix2::diagonal(0.7, 0.3)), kZ) < 1e-9);
  CHECK(geometric_coherence_oracle(QubitState(Matrix2::diagonal(1.0, 0.0)), kZ) < 1e-9);
  CHECK(std::abs(geometric_coherence_oracle(QubitState::maximally_coherent_mixed(0.6), kZ) - 0.1) < 1e-6);
}

TEST_CASE("oracle agrees with the closed form") {
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    auto rng = stream(205, i);
    const QubitState rho = sampling::sample_state(rng, static_cast<sampling::Family>(i % 3), 0.5 + 0.5 * rng.uniform());
    const OrthonormalBasis b = sampling::sample_basis(rng);
    worst = std::max(worst, std::abs(verification::geometric_coherence_oracle(rho, b) -
                                     geometric_coherence(rho, b).value));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("pure_state_coherence examples and agreement") {
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(pure_state_coherence(PureKet::zero(), kZ) == 0.0);
  CHECK(std::abs(pure_state_coherence(PureKet(h, h), kZ) - 0.5) < 1e-15);
  const double t = testing::kPi / 6;
  CHECK(std::abs(pure_state_coherence(PureKet(std::cos(t), std::sin(t)), kZ) - 0.25) < 1e-15);

  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    auto rng = stream(206, i);
    const PureKet psi = sampling::sample_pure(rng);
    const OrthonormalBasis b = sampling::sample_basis(rng);
    worst = std::max(worst, std::abs(pure_state_coherence(psi, b) -
                                     geometric_coherence(QubitState::from_ket(psi), b).value));
  }
  CHECK(worst < 1e-10);
}
