#include "geocoh/tradeoffs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "geocoh/coherence.hpp"

namespace geocoh {

namespace {

constexpr double kCaseBoundary = 1e-12;
constexpr double kIncompatibilityClamp = 1e-9;

double checked_purity(double p) {
  if (!(p >= 0.5 - tol::kRange && p <= 1.0 + tol::kRange))
    throw DomainError("purity " + std::to_string(p) + " outside [1/2, 1]");
  return std::clamp(p, 0.5, 1.0);
}

double checked_incompatibility(double c) {
  if (!(c >= 0.5 - tol::kRange && c <= 1.0 + tol::kRange))
    throw DomainError("incompatibility " + std::to_string(c) + " outside [1/2, 1]");
  return std::clamp(c, 0.5, 1.0);
}

double case1_bound(double purity, const std::array<double, 3>& s) {
  return 1.0 - 0.5 * (f_convex(s[0], purity) + f_convex(s[0] - s[2], purity));
}

double case2_bound(double purity, const std::array<double, 3>& s) {
  const double edge = 1.0 + f_convex(s[0], purity) + f_convex(s[1], purity);
  const double apex = f_convex(0.5 * (1.0 - s[0] - s[1] + s[2]), purity) +
                      f_convex(0.5 * (1.0 - s[0] + s[1] - s[2]), purity) +
                      f_convex(0.5 * (1.0 + s[0] - s[1] - s[2]), purity);
  return 1.5 - 0.5 * std::max(edge, apex);
}

std::array<double, 3> roots(const IncompatibilityVector& cv) {
  return {std::sqrt(cv[0]), std::sqrt(cv[1]), std::sqrt(cv[2])};
}

}  // namespace

IncompatibilityVector::IncompatibilityVector(double c1, double c2, double c3) {
  c_ = {checked_incompatibility(c1), checked_incompatibility(c2), checked_incompatibility(c3)};
  if (c_[0] < c_[1] || c_[1] < c_[2])
    throw DomainError("incompatibility vector must be sorted in descending order");
}

double f_convex(double x, double purity) {
  const double radicand = 1.0 + 4.0 * (2.0 * purity - 1.0) * (x * x - x);
  return std::sqrt(std::max(0.0, radicand));
}

double theorem1_upper_bound(double purity) {
  const double p = checked_purity(purity);
  return 0.5 - std::sqrt(0.5 * (1.0 - p));
}

bool theorem1_saturated(const QubitState& rho, const OrthonormalBasis& basis) {
  return std::abs(expectation(rho, basis[0]) - 0.5) <= tol::kSaturation;
}

double mixedness(const QubitState& rho) {
  return std::clamp(2.0 * (1.0 - purity(rho)), 0.0, 1.0);
}

BoundReport complementarity_check(const QubitState& rho, const OrthonormalBasis& basis) {
  BoundReport r;
  r.sense = BoundReport::Sense::kUpperBound;
  r.lhs = geometric_coherence(rho, basis).value + 0.5 * std::sqrt(mixedness(rho));
  r.bound = 0.5;
  r.slack = r.bound - r.lhs;
  r.saturated = theorem1_saturated(rho, basis);
  return r;
}

bool lemma1_feasible(double a, double b, double c, bool dim2, double tolerance) {
  const double rc = std::sqrt(std::max(0.0, c));
  if (a + b > 1.0 + rc + tolerance) return false;
  if (std::abs(a - b) > std::sqrt(std::max(0.0, 1.0 - c)) + tolerance) return false;
  if (dim2 && 1.0 - rc > a + b + tolerance) return false;
  return true;
}

Incompatibility incompatibility(const OrthonormalBasis& x, const OrthonormalBasis& y) {
  Incompatibility best{-1.0, {0, 0}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double v = overlap2(x[i], y[j]);
      if (v > best.value) best = {v, {i, j}};
    }
  if (best.value < 0.5) {
    if (best.value < 0.5 - kIncompatibilityClamp)
      throw DomainError("incompatibility " + std::to_string(best.value) + " below 1/2");
    note_clamp(ClampSite::kIncompatibility);
    best.value = 0.5;
  }
  return best;
}

IncompatibilityVector incompatibility_vector(const OrthonormalBasis& x, const OrthonormalBasis& y,
                                             const OrthonormalBasis& z) {
  std::array<double, 3> c{incompatibility(x, y).value, incompatibility(y, z).value,
                          incompatibility(x, z).value};
  std::sort(c.begin(), c.end(), std::greater<>());
  return {c[0], c[1], c[2]};
}

double theorem2_lower_bound(double purity, double c) {
  const double p = checked_purity(purity);
  const double cc = checked_incompatibility(c);
  return 0.5 * (1.0 - std::sqrt(1.0 + 4.0 * (2.0 * p - 1.0) * (cc - std::sqrt(cc))));
}

double pure_state_uncertainty_bound(double c) {
  const double cc = checked_incompatibility(c);
  return 0.5 * (1.0 - std::sqrt(1.0 + 4.0 * (cc - std::sqrt(cc))));
}

BoundReport theorem2_check(const QubitState& rho, const OrthonormalBasis& x,
                           const OrthonormalBasis& y) {
  BoundReport r;
  r.lhs = geometric_coherence(rho, x).value + geometric_coherence(rho, y).value;
  r.bound = theorem2_lower_bound(purity(rho), incompatibility(x, y).value);
  r.slack = r.lhs - r.bound;
  r.saturated = r.slack <= tol::kSaturation;
  return r;
}

Theorem3Case theorem3_case(const IncompatibilityVector& cv) {
  const auto s = roots(cv);
  const double margin = (s[0] + s[1]) - (1.0 + s[2]);
  if (margin > kCaseBoundary) return Theorem3Case::kFirst;
  if (margin < -kCaseBoundary) return Theorem3Case::kSecond;
  return Theorem3Case::kBoundary;
}

double theorem3_lower_bound(double purity, const IncompatibilityVector& cv) {
  const double p = checked_purity(purity);
  const auto s = roots(cv);
  switch (theorem3_case(cv)) {
    case Theorem3Case::kFirst: return case1_bound(p, s);
    case Theorem3Case::kSecond: return case2_bound(p, s);
    case Theorem3Case::kBoundary: break;
  }
  return std::min(case1_bound(p, s), case2_bound(p, s));
}

BoundReport theorem3_check(const QubitState& rho, const OrthonormalBasis& x,
                           const OrthonormalBasis& y, const OrthonormalBasis& z) {
  BoundReport r;
  r.lhs = geometric_coherence(rho, x).value + geometric_coherence(rho, y).value +
          geometric_coherence(rho, z).value;
  r.bound = theorem3_lower_bound(purity(rho), incompatibility_vector(x, y, z));
  r.slack = r.lhs - r.bound;
  r.saturated = r.slack <= tol::kSaturation;
  return r;
}

namespace verification {

namespace {

// Dense-grid maximization over a polytope inside [0, 1/2]^D followed by
// window-halving refinement around the best feasible point of each coarse
// block. The objective is a sum of one-dimensional terms.
template <int D>
class GridMaximizer {
 public:
  using Point = std::array<double, D>;

  GridMaximizer(std::function<double(double)> term, std::function<bool(const Point&)> feasible)
      : term_(std::move(term)), feasible_(std::move(feasible)) {}

  double maximize(int n, const GridSettings& settings) const {
    const double h = 0.5 / (n - 1);
    std::vector<double> axis(n);
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
      axis[i] = i == n - 1 ? 0.5 : i * h;
      values[i] = term_(axis[i]);
    }

    constexpr int kBlocksPerAxis = 20;
    const int block_width = std::max(1, (n + kBlocksPerAxis - 1) / kBlocksPerAxis);
    int blocks_total = 1;
    for (int d = 0; d < D; ++d) blocks_total *= kBlocksPerAxis;
    struct Candidate {
      double value = -std::numeric_limits<double>::infinity();
      Point at{};
    };
    std::vector<Candidate> blocks(blocks_total);

    std::array<int, D> idx{};
    const long long total = [&] {
      long long t = 1;
      for (int d = 0; d < D; ++d) t *= n;
      return t;
    }();
    for (long long flat = 0; flat < total; ++flat) {
      long long rest = flat;
      for (int d = D - 1; d >= 0; --d) {
        idx[d] = static_cast<int>(rest % n);
        rest /= n;
      }
      Point p;
      double v = 0.0;
      int block = 0;
      for (int d = 0; d < D; ++d) {
        p[d] = axis[idx[d]];
        v += values[idx[d]];
        block = block * kBlocksPerAxis + idx[d] / block_width;
      }
      if (v <= blocks[block].value || !feasible_(p)) continue;
      blocks[block] = {v, p};
    }

    std::sort(blocks.begin(), blocks.end(),
              [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    if (!std::isfinite(blocks.front().value))
      throw DomainError("optimization domain has no feasible grid point");

    double best = blocks.front().value;
    const int k = std::min<int>(settings.refine_candidates, static_cast<int>(blocks.size()));
    for (int c = 0; c < k && std::isfinite(blocks[c].value); ++c)
      best = std::max(best, refine(blocks[c].at, blocks[c].value, 2.0 * h, settings.refine_levels));
    return best;
  }

 private:
  double evaluate(const Point& p) const {
    double v = 0.0;
    for (double x : p) v += term_(x);
    return v;
  }

  double refine(Point center, double value, double half_width, int levels) const {
    constexpr int kPoints = 21;
    for (int level = 0; level < levels; ++level) {
      std::array<std::array<double, kPoints>, D> grid;
      for (int d = 0; d < D; ++d) {
        const double lo = std::max(0.0, center[d] - half_width);
        const double hi = std::min(0.5, center[d] + half_width);
        for (int i = 0; i < kPoints; ++i)
          grid[d][i] = i == kPoints - 1 ? hi : lo + (hi - lo) * i / (kPoints - 1);
      }
      int count = 1;
      for (int d = 0; d < D; ++d) count *= kPoints;
      for (int flat = 0; flat < count; ++flat) {
        int rest = flat;
        Point p;
        for (int d = D - 1; d >= 0; --d) {
          p[d] = grid[d][rest % kPoints];
          rest /= kPoints;
        }
        if (!feasible_(p)) continue;
        const double v = evaluate(p);
        if (v > value) {
          value = v;
          center = p;
        }
      }
      half_width *= 0.5;
    }
    return value;
  }

  std::function<double(double)> term_;
  std::function<bool(const Point&)> feasible_;
};

}  // namespace

double theorem2_proof_oracle(double purity, double c, const GridSettings& settings) {
  const double p = checked_purity(purity);
  const double cc = checked_incompatibility(c);
  const double rc = std::sqrt(cc);
  const double rs = std::sqrt(1.0 - cc);
  GridMaximizer<2> solver([p](double x) { return f_convex(x, p); },
                          [rc, rs](const std::array<double, 2>& q) {
                            const double sum = q[0] + q[1];
                            return sum >= 1.0 - rc && sum <= 1.0 + rc &&
                                   std::abs(q[1] - q[0]) <= rs;
                          });
  const int n = settings.points_per_axis > 0 ? settings.points_per_axis : 2001;
  return 1.0 - 0.5 * solver.maximize(n, settings);
}

double theorem3_proof_oracle(double purity, const IncompatibilityVector& cv,
                             const GridSettings& settings) {
  const double p = checked_purity(purity);
  const auto s = roots(cv);
  const double r1 = std::sqrt(1.0 - cv[0]);
  const double r2 = std::sqrt(1.0 - cv[1]);
  GridMaximizer<3> solver(
      [p](double x) { return f_convex(x, p); },
      [s, r1, r2](const std::array<double, 3>& q) {
        const double a = q[0], b = q[1], n = q[2];
        return a + b >= 1.0 - s[0] && a + b <= 1.0 + s[0] &&  //
               a + n >= 1.0 - s[1] && a + n <= 1.0 + s[1] &&  //
               b + n >= 1.0 - s[2] && b + n <= 1.0 + s[2] &&  //
               std::abs(b - a) <= r1 && std::abs(n - a) <= r2;
      });
  const int n = settings.points_per_axis > 0 ? settings.points_per_axis : 201;
  return 1.5 - 0.5 * solver.maximize(n, settings);
}

}  // namespace verification
}  // namespace geocoh
