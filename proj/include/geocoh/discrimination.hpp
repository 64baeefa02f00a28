#pragma once

// Minimum-error discrimination of two pure states under projective
// measurement, and its link to the geometric coherence.

#include <array>
#include <utility>
#include <vector>

#include "geocoh/qubit.hpp"
#include "geocoh/tradeoffs.hpp"

namespace geocoh {

namespace tol {
inline constexpr double kWeight = 1e-10;
}

class DegenerateWeight : public Error {
 public:
  using Error::Error;
};

struct EnsembleMember {
  double weight;
  PureKet ket;
};

class PureEnsemble {
 public:
  // Exactly two members, nonnegative weights summing to 1 within tol::kNorm.
  explicit PureEnsemble(std::vector<EnsembleMember> members);
  PureEnsemble(double p1, const PureKet& psi1, const PureKet& psi2);

  const EnsembleMember& operator[](int i) const { return members_[i]; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<EnsembleMember> members_;
};

struct DiscriminationResult {
  double error_probability;
  // Bloch vector of the projector that declares "member 1".
  std::array<double, 3> optimal_projector_bloch;
};

// Helstrom optimum from the spectrum of p1 rho1 - p2 rho2.
DiscriminationResult min_error_probability(const PureEnsemble& ensemble);

// Independent closed form (1/2)(1 - sqrt(1 - 4 p1 p2 |<psi1|psi2>|^2)).
double helstrom_error_probability(const PureEnsemble& ensemble);

// Success probability of the measurement {Pi, I - Pi}, Pi given by its Bloch
// vector.
double success_probability(const PureEnsemble& ensemble, const std::array<double, 3>& projector_bloch);

// eta_i = <x_i|rho|x_i>, psi_i = eta_i^{-1/2} sqrt(rho) |x_i>. Throws
// DegenerateWeight if some eta_i < tol::kWeight.
PureEnsemble ensemble_from_state(const QubitState& rho, const OrthonormalBasis& basis);

QubitState state_from_ensemble(const PureEnsemble& ensemble);

// Basis X with sqrt(p_i) |psi_i> = sqrt(rho) |x_i>. Requires rho full rank;
// throws DegenerateWeight otherwise.
OrthonormalBasis ensemble_reference_basis(const PureEnsemble& ensemble);

// (C_g of rho in the basis, P_e of the induced ensemble). For degenerate
// weights the induced ensemble has a single member and P_e is 0.
std::pair<double, double> lemma2_check(const QubitState& rho, const OrthonormalBasis& basis);

struct Corollary4Report {
  BoundReport purity_form;     // P_e <= 1/2 - sqrt((1 - P)/2)
  BoundReport mixedness_form;  // P_e + sqrt(S_L)/2 <= 1/2
  double purity;
};

Corollary4Report corollary4_check(const PureEnsemble& ensemble);

// psi1 = cos t |x1> + sin t |x2>, psi2 = sin t |x1> + cos t |x2>, equal weights.
PureEnsemble symmetric_ensemble(double theta, const OrthonormalBasis& basis);

}  // namespace geocoh
