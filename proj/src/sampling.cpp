#include "geocoh/sampling.hpp"

#include <array>
#include <cmath>

namespace geocoh::sampling {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

Complex complex_normal(Xoshiro256& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re, im};
}

std::array<double, 3> random_direction(Xoshiro256& rng) {
  for (;;) {
    const double x = rng.normal();
    const double y = rng.normal();
    const double z = rng.normal();
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n > 1e-12) return {x / n, y / n, z / n};
  }
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  state += kGolden;
  return mix64(state);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + kGolden * (index + 1));
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

Xoshiro256::result_type Xoshiro256::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Xoshiro256::normal() {
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

void SampleConfig::validate() const {
  if (count < 1) throw DomainError("sample count must be positive");
  if (family == Family::kFixedPurity && !(fixed_purity >= 0.5 && fixed_purity <= 1.0))
    throw DomainError("fixed purity must lie in [1/2, 1]");
}

Family parse_family(const std::string& name) {
  if (name == "haar_pure") return Family::kHaarPure;
  if (name == "uniform_bloch_ball") return Family::kUniformBlochBall;
  if (name == "fixed_purity") return Family::kFixedPurity;
  if (name == "haar_basis") return Family::kHaarBasis;
  if (name == "random_ensemble") return Family::kRandomEnsemble;
  throw DomainError("unknown sample family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kHaarPure: return "haar_pure";
    case Family::kUniformBlochBall: return "uniform_bloch_ball";
    case Family::kFixedPurity: return "fixed_purity";
    case Family::kHaarBasis: return "haar_basis";
    case Family::kRandomEnsemble: return "random_ensemble";
  }
  return "unknown";
}

PureKet sample_pure(Xoshiro256& rng) {
  const Complex a = complex_normal(rng);
  const Complex b = complex_normal(rng);
  return PureKet::normalized(a, b).phase_fixed();
}

QubitState sample_state(Xoshiro256& rng, Family family, double fixed_purity) {
  switch (family) {
    case Family::kHaarPure: return QubitState::from_ket(sample_pure(rng));
    case Family::kUniformBlochBall: {
      const auto dir = random_direction(rng);
      const double r = std::cbrt(rng.uniform());
      return QubitState::from_bloch(r * dir[0], r * dir[1], r * dir[2]);
    }
    case Family::kFixedPurity: {
      if (!(fixed_purity >= 0.5 && fixed_purity <= 1.0))
        throw DomainError("fixed purity must lie in [1/2, 1]");
      const auto dir = random_direction(rng);
      const double r = std::sqrt(2.0 * fixed_purity - 1.0);
      return QubitState::from_bloch(r * dir[0], r * dir[1], r * dir[2]);
    }
    case Family::kHaarBasis:
    case Family::kRandomEnsemble: break;
  }
  throw DomainError(std::string("family ") + family_name(family) + " does not produce states");
}

OrthonormalBasis sample_basis(Xoshiro256& rng) {
  const Complex a0 = complex_normal(rng);
  const Complex a1 = complex_normal(rng);
  const Complex b0 = complex_normal(rng);
  const Complex b1 = complex_normal(rng);
  const PureKet u = PureKet::normalized(a0, a1);
  const Complex proj = std::conj(u[0]) * b0 + std::conj(u[1]) * b1;
  const PureKet w = PureKet::normalized(b0 - proj * u[0], b1 - proj * u[1]);
  return {u.phase_fixed(), w.phase_fixed()};
}

PureEnsemble sample_ensemble(Xoshiro256& rng) {
  const PureKet psi1 = sample_pure(rng);
  const PureKet psi2 = sample_pure(rng);
  const double lo = 10.0 * tol::kWeight;
  const double p1 = lo + (1.0 - 2.0 * lo) * rng.uniform();
  return PureEnsemble(p1, psi1, psi2);
}

}  // namespace geocoh::sampling
