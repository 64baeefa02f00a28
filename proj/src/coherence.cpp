#include "geocoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace geocoh {

namespace {

constexpr double kRadicandSlack = 1e-12;

double clamp_fidelity(double f) {
  if (f > 1.0) {
    note_clamp(ClampSite::kFidelity);
    return 1.0;
  }
  if (f < 0.0) {
    note_clamp(ClampSite::kFidelity);
    return 0.0;
  }
  return f;
}

// Fidelity with sqrt(rho) already formed.
double fidelity_from_root(const Matrix2& sqrt_rho, const Matrix2& sigma) {
  const Matrix2 inner = sqrt_rho * sigma * sqrt_rho;
  const double tr = matrix_sqrt_psd(inner).trace().real();
  return clamp_fidelity(tr * tr);
}

}  // namespace

double fidelity(const QubitState& rho, const QubitState& sigma) {
  return fidelity_from_root(matrix_sqrt_psd(rho.matrix()), sigma.matrix());
}

CoherenceResult geometric_coherence(const QubitState& rho, const OrthonormalBasis& basis) {
  const double d0 = expectation(rho, basis[0]);
  const double d1 = expectation(rho, basis[1]);
  double radicand = 1.0 - 2.0 * (purity(rho) - (d0 * d0 + d1 * d1));
  if (radicand < 0.0) {
    if (radicand < -kRadicandSlack)
      throw NumericalDomainError("coherence radicand " + std::to_string(radicand) +
                                 " is negative beyond round-off");
    note_clamp(ClampSite::kCoherenceRadicand);
    radicand = 0.0;
  } else if (radicand > 1.0) {
    note_clamp(ClampSite::kCoherenceRadicand);
    radicand = 1.0;
  }
  return {0.5 - 0.5 * std::sqrt(radicand), {d0, d1}};
}

double pure_state_coherence(const PureKet& psi, const OrthonormalBasis& basis) {
  return 1.0 - std::max(overlap2(basis[0], psi), overlap2(basis[1], psi));
}

namespace verification {

double geometric_coherence_oracle(const QubitState& rho, const OrthonormalBasis& basis,
                                  const OracleSettings& settings) {
  const Matrix2 root = matrix_sqrt_psd(rho.matrix());
  const Matrix2 p0 = basis[0].projector();
  const Matrix2 p1 = basis[1].projector();
  auto objective = [&](double t) {
    return fidelity_from_root(root, Complex(t) * p0 + Complex(1.0 - t) * p1);
  };

  const int n = std::max(settings.grid_points, 3);
  const double h = 1.0 / (n - 1);
  int best_k = 0;
  double best = -1.0;
  for (int k = 0; k < n; ++k) {
    const double v = objective(k * h);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }

  double lo = std::max(0.0, (best_k - 1) * h);
  double hi = std::min(1.0, (best_k + 1) * h);
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > settings.bracket_width) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  best = std::max({best, f1, f2, objective(0.5 * (lo + hi))});
  return 1.0 - best;
}

}  // namespace verification
}  // namespace geocoh
