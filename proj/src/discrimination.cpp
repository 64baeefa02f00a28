#include "geocoh/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geocoh/coherence.hpp"

namespace geocoh {

namespace {

constexpr double kErrorSlack = 1e-12;

Matrix2 bloch_projector(const std::array<double, 3>& n) {
  return {0.5 * (1.0 + n[2]), Complex(0.5 * n[0], -0.5 * n[1]), Complex(0.5 * n[0], 0.5 * n[1]),
          0.5 * (1.0 - n[2])};
}

PureKet combine(Complex c0, const PureKet& k0, Complex c1, const PureKet& k1) {
  return PureKet::normalized(c0 * k0[0] + c1 * k1[0], c0 * k0[1] + c1 * k1[1]);
}

}  // namespace

PureEnsemble::PureEnsemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
  if (members_.size() != 2)
    throw DomainError("ensemble must have exactly two members, got " +
                      std::to_string(members_.size()));
  double total = 0.0;
  for (const auto& m : members_) {
    if (!std::isfinite(m.weight) || m.weight < 0.0)
      throw DomainError("ensemble weight must be finite and nonnegative");
    total += m.weight;
  }
  if (std::abs(total - 1.0) > tol::kNorm)
    throw DomainError("ensemble weights sum to " + std::to_string(total) + ", not 1");
}

PureEnsemble::PureEnsemble(double p1, const PureKet& psi1, const PureKet& psi2)
    : PureEnsemble(std::vector<EnsembleMember>{{p1, psi1}, {1.0 - p1, psi2}}) {}

DiscriminationResult min_error_probability(const PureEnsemble& ensemble) {
  const Matrix2 delta = Complex(ensemble[0].weight) * ensemble[0].ket.projector() -
                        Complex(ensemble[1].weight) * ensemble[1].ket.projector();
  const auto es = eig_hermitian_2x2(delta);
  const double success =
      ensemble[1].weight + std::max(es.values[0], 0.0) + std::max(es.values[1], 0.0);
  double pe = 1.0 - success;
  if (pe < 0.0) {
    note_clamp(ClampSite::kErrorProbability);
    pe = 0.0;
  } else if (pe > 0.5) {
    if (pe > 0.5 + kErrorSlack)
      throw NumericalDomainError("error probability " + std::to_string(pe) + " exceeds 1/2");
    note_clamp(ClampSite::kErrorProbability);
    pe = 0.5;
  }
  return {pe, es.vectors[0].bloch()};
}

double helstrom_error_probability(const PureEnsemble& ensemble) {
  const double ov = overlap2(ensemble[0].ket, ensemble[1].ket);
  const double radicand = 1.0 - 4.0 * ensemble[0].weight * ensemble[1].weight * ov;
  return 0.5 * (1.0 - std::sqrt(std::max(0.0, radicand)));
}

double success_probability(const PureEnsemble& ensemble,
                           const std::array<double, 3>& projector_bloch) {
  const Matrix2 pi = bloch_projector(projector_bloch);
  const double hit1 = sandwich(ensemble[0].ket, pi, ensemble[0].ket).real();
  const double hit2 = 1.0 - sandwich(ensemble[1].ket, pi, ensemble[1].ket).real();
  return ensemble[0].weight * hit1 + ensemble[1].weight * hit2;
}

PureEnsemble ensemble_from_state(const QubitState& rho, const OrthonormalBasis& basis) {
  const Matrix2 root = matrix_sqrt_psd(rho.matrix());
  std::array<double, 2> eta{expectation(rho, basis[0]), expectation(rho, basis[1])};
  for (int i = 0; i < 2; ++i)
    if (eta[i] < tol::kWeight)
      throw DegenerateWeight("basis weight " + std::to_string(eta[i]) +
                             " is degenerate; the state is incoherent in this basis");
  const double total = eta[0] + eta[1];
  return PureEnsemble(eta[0] / total, apply(root, basis[0]), apply(root, basis[1]));
}

QubitState state_from_ensemble(const PureEnsemble& ensemble) {
  return QubitState(Complex(ensemble[0].weight) * ensemble[0].ket.projector() +
                    Complex(ensemble[1].weight) * ensemble[1].ket.projector());
}

OrthonormalBasis ensemble_reference_basis(const PureEnsemble& ensemble) {
  const auto es = eig_hermitian_2x2(state_from_ensemble(ensemble).matrix());
  if (es.values[1] < tol::kWeight)
    throw DegenerateWeight("ensemble state is rank deficient");
  const Matrix2 inv_root = Complex(1.0 / std::sqrt(es.values[0])) * es.vectors[0].projector() +
                           Complex(1.0 / std::sqrt(es.values[1])) * es.vectors[1].projector();
  const double w = std::sqrt(ensemble[0].weight);
  const PureKet& psi = ensemble[0].ket;
  const PureKet x1 = PureKet::normalized(w * (inv_root(0, 0) * psi[0] + inv_root(0, 1) * psi[1]),
                                         w * (inv_root(1, 0) * psi[0] + inv_root(1, 1) * psi[1]));
  return OrthonormalBasis::completed(x1);
}

std::pair<double, double> lemma2_check(const QubitState& rho, const OrthonormalBasis& basis) {
  const double cg = geometric_coherence(rho, basis).value;
  try {
    return {cg, min_error_probability(ensemble_from_state(rho, basis)).error_probability};
  } catch (const DegenerateWeight&) {
    return {cg, 0.0};
  }
}

Corollary4Report corollary4_check(const PureEnsemble& ensemble) {
  const double pe = min_error_probability(ensemble).error_probability;
  const QubitState rho = state_from_ensemble(ensemble);
  Corollary4Report out;
  out.purity = purity(rho);

  auto& pf = out.purity_form;
  pf.sense = BoundReport::Sense::kUpperBound;
  pf.lhs = pe;
  pf.bound = theorem1_upper_bound(out.purity);
  pf.slack = pf.bound - pf.lhs;
  pf.saturated = pf.slack <= tol::kSaturation;

  auto& mf = out.mixedness_form;
  mf.sense = BoundReport::Sense::kUpperBound;
  mf.lhs = pe + 0.5 * std::sqrt(mixedness(rho));
  mf.bound = 0.5;
  mf.slack = mf.bound - mf.lhs;
  mf.saturated = mf.slack <= tol::kSaturation;
  return out;
}

PureEnsemble symmetric_ensemble(double theta, const OrthonormalBasis& basis) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return PureEnsemble(0.5, combine(c, basis[0], s, basis[1]), combine(s, basis[0], c, basis[1]));
}

}  // namespace geocoh
