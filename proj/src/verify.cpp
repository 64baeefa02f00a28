#include "geocoh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <array>
#include <functional>
#include <limits>
#include <thread>
#include <tuple>
#include <vector>

#include "geocoh/coherence.hpp"
#include "geocoh/discrimination.hpp"
#include "geocoh/sampling.hpp"
#include "geocoh/tradeoffs.hpp"

namespace geocoh::verification {

namespace {

using sampling::Xoshiro256;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLemma2Tol = 1e-8;
constexpr double kRoundTripTol = 1e-10;
constexpr double kOracle1Tol = 1e-6;
constexpr double kOracle2Tol = 1e-4;
constexpr double kOracle3Tol = 1e-3;

struct Outcome {
  double slack = kInf;
  double diff = 0.0;
  bool violation = false;
  bool saturated = false;
  bool skipped = false;
};

struct Accumulator {
  CampaignReport report;

  void add(long long index, const Outcome& o) {
    if (o.skipped) {
      ++report.skipped;
      return;
    }
    ++report.samples;
    if (o.slack < report.worst_slack ||
        (o.slack == report.worst_slack && o.slack < kInf && index < report.worst_index)) {
      report.worst_slack = o.slack;
      report.worst_index = index;
    }
    report.max_abs_diff = std::max(report.max_abs_diff, o.diff);
    if (o.violation) ++report.violations;
    if (o.saturated) ++report.saturated;
  }

  void merge(const CampaignReport& other) {
    report.samples += other.samples;
    report.skipped += other.skipped;
    if (other.worst_slack < report.worst_slack ||
        (other.worst_slack == report.worst_slack && other.worst_index >= 0 &&
         (report.worst_index < 0 || other.worst_index < report.worst_index))) {
      report.worst_slack = other.worst_slack;
      report.worst_index = other.worst_index;
    }
    report.max_abs_diff = std::max(report.max_abs_diff, other.max_abs_diff);
    report.violations += other.violations;
    report.saturated += other.saturated;
  }
};

// Rotates through pure, uniform-ball and random-purity states so campaigns
// cover the boundary of the Bloch ball as well as its interior.
QubitState random_state(Xoshiro256& rng, long long index) {
  switch (index % 3) {
    case 0: return sampling::sample_state(rng, sampling::Family::kHaarPure);
    case 1: return sampling::sample_state(rng, sampling::Family::kUniformBlochBall);
    default: {
      const double p = 0.5 + 0.5 * rng.uniform();
      return sampling::sample_state(rng, sampling::Family::kFixedPurity, p);
    }
  }
}

QubitState state_for(Xoshiro256& rng, long long index, const CampaignOptions& opt) {
  QubitState drawn = random_state(rng, index);
  return opt.forced_state ? *opt.forced_state : drawn;
}

Outcome lower_bound_outcome(const BoundReport& r) {
  Outcome o;
  o.slack = r.slack;
  o.violation = !r.holds();
  o.saturated = r.saturated;
  return o;
}

const std::vector<std::pair<double, double>>& oracle2_sweep() {
  static const std::vector<std::pair<double, double>> sweep = [] {
    std::vector<std::pair<double, double>> s;
    for (double p : {0.5, 0.75, 1.0})
      for (int k = 0; k <= 10; ++k) s.emplace_back(p, std::min(1.0, 0.5 + 0.05 * k));
    return s;
  }();
  return sweep;
}

struct Oracle3Fixture {
  double purity;
  std::array<double, 3> cv;
};

const std::vector<Oracle3Fixture>& oracle3_fixtures() {
  static const std::vector<Oracle3Fixture> fixtures = {
      {1.0, {0.9, 0.8, 0.5}},  {0.82, {0.9, 0.8, 0.5}}, {0.75, {0.75, 0.75, 0.5}},
      {1.0, {0.75, 0.75, 0.5}}, {0.9, {0.74, 0.73, 0.5}}, {0.5, {0.6, 0.55, 0.5}},
      {1.0, {1.0, 1.0, 1.0}},  {1.0, {0.5, 0.5, 0.5}},
  };
  return fixtures;
}

Outcome oracle3_outcome(double purity, const IncompatibilityVector& cv) {
  Outcome o;
  const double bound = theorem3_lower_bound(purity, cv);
  const double oracle = theorem3_proof_oracle(purity, cv);
  o.slack = oracle - bound;
  o.violation = o.slack < -kOracle3Tol;
  if (cv[0] <= 0.75 && theorem3_case(cv) == Theorem3Case::kFirst) {
    o.diff = std::abs(oracle - bound);
    o.violation = o.violation || o.diff >= kOracle3Tol;
  }
  return o;
}

Outcome evaluate(Campaign which, long long index, const CampaignOptions& opt) {
  Xoshiro256 rng(sampling::derive_seed(opt.seed, static_cast<std::uint64_t>(index)));
  switch (which) {
    case Campaign::kT1: {
      const QubitState rho = state_for(rng, index, opt);
      const auto basis = sampling::sample_basis(rng);
      Outcome o;
      o.slack = theorem1_upper_bound(purity(rho)) - geometric_coherence(rho, basis).value;
      o.violation = o.slack < -tol::kSlack;
      o.saturated = theorem1_saturated(rho, basis);
      return o;
    }
    case Campaign::kC1: {
      const QubitState rho = state_for(rng, index, opt);
      return lower_bound_outcome(complementarity_check(rho, sampling::sample_basis(rng)));
    }
    case Campaign::kL1: {
      const PureKet x = sampling::sample_pure(rng);
      const PureKet z = sampling::sample_pure(rng);
      const PureKet r = sampling::sample_pure(rng);
      const double a = overlap2(x, r);
      const double b = overlap2(z, r);
      const double c = overlap2(z, x);
      Outcome o;
      o.slack = std::min({1.0 + std::sqrt(c) - (a + b), std::sqrt(1.0 - c) - std::abs(a - b),
                          a + b - (1.0 - std::sqrt(c))});
      o.violation = !lemma1_feasible(a, b, c, true);
      return o;
    }
    case Campaign::kT2: {
      const QubitState rho = state_for(rng, index, opt);
      const auto x = sampling::sample_basis(rng);
      const auto y = sampling::sample_basis(rng);
      return lower_bound_outcome(theorem2_check(rho, x, y));
    }
    case Campaign::kT3: {
      const QubitState rho = state_for(rng, index, opt);
      const auto x = sampling::sample_basis(rng);
      const auto y = sampling::sample_basis(rng);
      const auto z = sampling::sample_basis(rng);
      return lower_bound_outcome(theorem3_check(rho, x, y, z));
    }
    case Campaign::kLemma2: {
      const QubitState rho = state_for(rng, index, opt);
      const auto basis = sampling::sample_basis(rng);
      Outcome o;
      try {
        const PureEnsemble ens = ensemble_from_state(rho, basis);
        const double cg = geometric_coherence(rho, basis).value;
        const double pe = min_error_probability(ens).error_probability;
        const double residual = max_abs_diff(state_from_ensemble(ens).matrix(), rho.matrix());
        o.diff = std::abs(cg - pe);
        o.violation = o.diff >= kLemma2Tol || residual >= kRoundTripTol;
      } catch (const DegenerateWeight&) {
        o.skipped = true;
      }
      return o;
    }
    case Campaign::kC4: {
      const PureEnsemble ens = sampling::sample_ensemble(rng);
      const auto rep = corollary4_check(ens);
      Outcome o;
      o.slack = std::min(rep.purity_form.slack, rep.mixedness_form.slack);
      o.violation = !rep.purity_form.holds() || !rep.mixedness_form.holds();
      o.saturated = rep.purity_form.saturated;
      // Helstrom dual path.
      o.diff = std::abs(min_error_probability(ens).error_probability -
                        helstrom_error_probability(ens));
      o.violation = o.violation || o.diff >= 1e-10;
      return o;
    }
    case Campaign::kOracle1: {
      const QubitState rho = state_for(rng, index, opt);
      const auto basis = sampling::sample_basis(rng);
      Outcome o;
      o.diff = std::abs(geometric_coherence(rho, basis).value -
                        geometric_coherence_oracle(rho, basis));
      o.violation = o.diff >= kOracle1Tol;
      return o;
    }
    case Campaign::kOracle2: {
      const auto& sweep = oracle2_sweep();
      double p = 0.0;
      double c = 0.0;
      if (index < static_cast<long long>(sweep.size())) {
        std::tie(p, c) = sweep[index];
      } else {
        p = 0.5 + 0.5 * rng.uniform();
        c = 0.5 + 0.5 * rng.uniform();
      }
      Outcome o;
      o.diff = std::abs(theorem2_proof_oracle(p, c) - theorem2_lower_bound(p, c));
      o.violation = o.diff >= kOracle2Tol;
      return o;
    }
    case Campaign::kOracle3: {
      const auto& fixtures = oracle3_fixtures();
      if (index < static_cast<long long>(fixtures.size())) {
        const auto& f = fixtures[index];
        return oracle3_outcome(f.purity, IncompatibilityVector(f.cv[0], f.cv[1], f.cv[2]));
      }
      const auto x = sampling::sample_basis(rng);
      const auto y = sampling::sample_basis(rng);
      const auto z = sampling::sample_basis(rng);
      const double p = 0.5 + 0.5 * rng.uniform();
      return oracle3_outcome(p, incompatibility_vector(x, y, z));
    }
  }
  return {};
}

double campaign_tolerance(Campaign which) {
  switch (which) {
    case Campaign::kLemma2: return kLemma2Tol;
    case Campaign::kOracle1: return kOracle1Tol;
    case Campaign::kOracle2: return kOracle2Tol;
    case Campaign::kOracle3: return kOracle3Tol;
    default: return tol::kSlack;
  }
}

long long total_samples(Campaign which, int requested) {
  switch (which) {
    case Campaign::kOracle2: return static_cast<long long>(oracle2_sweep().size()) + requested;
    case Campaign::kOracle3: return static_cast<long long>(oracle3_fixtures().size()) + requested;
    default: return requested;
  }
}

}  // namespace

Campaign parse_campaign(const std::string& name) {
  static const std::pair<const char*, Campaign> table[] = {
      {"t1", Campaign::kT1},         {"c1", Campaign::kC1},           {"l1", Campaign::kL1},
      {"t2", Campaign::kT2},         {"t3", Campaign::kT3},           {"lemma2", Campaign::kLemma2},
      {"c4", Campaign::kC4},         {"oracle1", Campaign::kOracle1}, {"oracle2", Campaign::kOracle2},
      {"oracle3", Campaign::kOracle3},
  };
  for (const auto& [key, value] : table)
    if (name == key) return value;
  throw DomainError("unknown campaign '" + name + "'");
}

const char* campaign_name(Campaign c) {
  switch (c) {
    case Campaign::kT1: return "t1";
    case Campaign::kC1: return "c1";
    case Campaign::kL1: return "l1";
    case Campaign::kT2: return "t2";
    case Campaign::kT3: return "t3";
    case Campaign::kLemma2: return "lemma2";
    case Campaign::kC4: return "c4";
    case Campaign::kOracle1: return "oracle1";
    case Campaign::kOracle2: return "oracle2";
    case Campaign::kOracle3: return "oracle3";
  }
  return "unknown";
}

bool campaign_uses_state(Campaign c) {
  switch (c) {
    case Campaign::kT1:
    case Campaign::kC1:
    case Campaign::kT2:
    case Campaign::kT3:
    case Campaign::kLemma2:
    case Campaign::kOracle1: return true;
    default: return false;
  }
}

CampaignReport run_campaign(Campaign which, const CampaignOptions& options) {
  if (options.samples < 0) throw DomainError("sample count must be nonnegative");
  const long long total = total_samples(which, options.samples);

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<long long>(threads, 1, std::max<long long>(total, 1)));

  auto fresh = [&] {
    Accumulator acc;
    acc.report.name = campaign_name(which);
    acc.report.worst_slack = kInf;
    acc.report.tolerance = campaign_tolerance(which);
    return acc;
  };

  std::vector<Accumulator> shards(threads, fresh());
  std::vector<std::exception_ptr> failures(threads);
  auto run_shard = [&](int shard) {
    const long long begin = total * shard / threads;
    const long long end = total * (shard + 1) / threads;
    try {
      for (long long i = begin; i < end; ++i) shards[shard].add(i, evaluate(which, i, options));
    } catch (...) {
      failures[shard] = std::current_exception();
    }
  };

  if (threads == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(run_shard, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  Accumulator out = fresh();
  for (const auto& s : shards) out.merge(s.report);
  return out.report;
}

}  // namespace geocoh::verification
