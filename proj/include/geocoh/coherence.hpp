#pragma once

#include <array>

#include "geocoh/qubit.hpp"

namespace geocoh {

struct CoherenceResult {
  double value;                         // C_g in [0, 1/2]
  std::array<double, 2> basis_diagonals;  // <x_i|rho|x_i>
};

// Squared Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const QubitState& rho, const QubitState& sigma);

// Closed-form qubit geometric coherence:
//   C_g = 1/2 - 1/2 sqrt(1 - 2 (tr rho^2 - sum_i <x_i|rho|x_i>^2)).
// Radicand round-off in [-1e-12, 0) is clamped; anything lower throws
// NumericalDomainError.
CoherenceResult geometric_coherence(const QubitState& rho, const OrthonormalBasis& basis);

// 1 - max_i |<x_i|psi>|^2.
double pure_state_coherence(const PureKet& psi, const OrthonormalBasis& basis);

namespace verification {

struct OracleSettings {
  int grid_points = 4001;
  double bracket_width = 1e-12;
};

// 1 - max_t F(rho, t|x1><x1| + (1-t)|x2><x2|), maximized by a uniform grid on
// [0, 1] followed by golden-section refinement of the best bracket. Shares no
// code with geometric_coherence beyond the fidelity.
double geometric_coherence_oracle(const QubitState& rho, const OrthonormalBasis& basis,
                                  const OracleSettings& settings = {});

}  // namespace verification
}  // namespace geocoh
