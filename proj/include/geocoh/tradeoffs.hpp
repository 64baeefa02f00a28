#pragma once

// Trade-off relations for the qubit geometric coherence: the purity ceiling,
// the coherence/mixedness complementarity, and the two- and three-basis
// uncertainty relations in terms of basis incompatibility.

#include <array>
#include <utility>

#include "geocoh/qubit.hpp"

namespace geocoh {

namespace tol {
inline constexpr double kSlack = 1e-9;
inline constexpr double kSaturation = 1e-7;
inline constexpr double kRange = 1e-9;
}  // namespace tol

// An inequality evaluated on concrete inputs. For lower bounds
// slack = lhs - bound; for ceilings slack = bound - lhs. Either way a valid
// relation has slack >= -tol::kSlack.
struct BoundReport {
  enum class Sense { kLowerBound, kUpperBound };

  Sense sense = Sense::kLowerBound;
  double lhs = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool saturated = false;

  bool holds(double tolerance = tol::kSlack) const { return slack >= -tolerance; }
};

struct Incompatibility {
  double value;               // max_ij |<x_i|y_j>|^2, in [1/2, 1]
  std::pair<int, int> argmax;  // smallest (i, j) attaining the maximum
};

class IncompatibilityVector {
 public:
  // Throws DomainError unless c1 >= c2 >= c3 and each lies in [1/2, 1]
  // (round-off within tol::kRange is clamped).
  IncompatibilityVector(double c1, double c2, double c3);

  double operator[](int i) const { return c_[i]; }
  const std::array<double, 3>& values() const { return c_; }

 private:
  std::array<double, 3> c_;
};

// sqrt(1 + 4 (2P - 1)(x^2 - x)); convex in x and symmetric about 1/2.
double f_convex(double x, double purity);

// 1/2 - sqrt((1 - P)/2).
double theorem1_upper_bound(double purity);
bool theorem1_saturated(const QubitState& rho, const OrthonormalBasis& basis);

// Normalized linear entropy 2 (1 - P), clamped to [0, 1].
double mixedness(const QubitState& rho);

// C_g + sqrt(S_L)/2 <= 1/2, reported with sense kUpperBound and bound = 1/2.
BoundReport complementarity_check(const QubitState& rho, const OrthonormalBasis& basis);

// Overlap constraints for three normalized vectors with a = |<x|r>|^2,
// b = |<z|r>|^2, c = |<z|x>|^2; dim2 adds the qubit-only lower constraint.
bool lemma1_feasible(double a, double b, double c, bool dim2, double tolerance = tol::kSlack);

Incompatibility incompatibility(const OrthonormalBasis& x, const OrthonormalBasis& y);
IncompatibilityVector incompatibility_vector(const OrthonormalBasis& x, const OrthonormalBasis& y,
                                             const OrthonormalBasis& z);

// (1/2) [1 - sqrt(1 + 4 (2P - 1)(c - sqrt c))].
double theorem2_lower_bound(double purity, double c);
// State-independent pure-state form (1/2) [1 - sqrt(1 + 4 (c - sqrt c))].
double pure_state_uncertainty_bound(double c);
BoundReport theorem2_check(const QubitState& rho, const OrthonormalBasis& x,
                           const OrthonormalBasis& y);

enum class Theorem3Case { kFirst, kSecond, kBoundary };

// kFirst when 1 + sqrt(c3) < sqrt(c1) + sqrt(c2) by more than 1e-12, kSecond
// when it fails by more than 1e-12, kBoundary in between.
Theorem3Case theorem3_case(const IncompatibilityVector& cv);
// On kBoundary both branches are evaluated and the smaller bound returned.
double theorem3_lower_bound(double purity, const IncompatibilityVector& cv);
BoundReport theorem3_check(const QubitState& rho, const OrthonormalBasis& x,
                           const OrthonormalBasis& y, const OrthonormalBasis& z);

namespace verification {

struct GridSettings {
  int points_per_axis = 0;  // 0 selects the default for the oracle
  int refine_levels = 12;
  int refine_candidates = 16;
};

// Maximizes f(a) + f(b) over {a + b in [1 - sqrt c, 1 + sqrt c],
// |b - a| <= sqrt(1 - c), a, b in [0, 1/2]} on a 2001 x 2001 grid, then zooms
// in around the best feasible points. Returns 1 - max/2.
double theorem2_proof_oracle(double purity, double c, const GridSettings& settings = {});

// Same for f(a) + f(b) + f(n) over the relaxed three-basis polyhedron on a
// 201^3 grid. Returns 3/2 - max/2. Throws DomainError if no grid point is
// feasible.
double theorem3_proof_oracle(double purity, const IncompatibilityVector& cv,
                             const GridSettings& settings = {});

}  // namespace verification
}  // namespace geocoh
