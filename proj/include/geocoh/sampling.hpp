#pragma once

// Seeded random kets, states, bases and ensembles.
//
// Generator: xoshiro256** (Blackman & Vigna), state filled by four successive
// splitmix64 outputs from the 64-bit seed. Uniform doubles use the top 53 bits
// of each output. Standard normals use the Marsaglia polar method: draw
// u, v uniform on (-1, 1) until 0 < s = u^2 + v^2 < 1, return u sqrt(-2 ln s / s);
// the second variate is discarded.
//
// Campaigns never share a stream: sample i of a campaign seeded with S draws
// from its own generator seeded with derive_seed(S, i).

#include <cstdint>
#include <string>

#include "geocoh/discrimination.hpp"
#include "geocoh/qubit.hpp"

namespace geocoh::sampling {

std::uint64_t splitmix64(std::uint64_t& state);
// mix64(S + 0x9E3779B97F4A7C15 * (index + 1)) with the splitmix64 finalizer.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  double uniform();  // [0, 1)
  double normal();

 private:
  std::uint64_t s_[4];
};

enum class Family { kHaarPure, kUniformBlochBall, kFixedPurity, kHaarBasis, kRandomEnsemble };

struct SampleConfig {
  std::uint64_t seed = 0;
  int count = 1;
  Family family = Family::kUniformBlochBall;
  double fixed_purity = 1.0;  // used by kFixedPurity only

  void validate() const;
};

Family parse_family(const std::string& name);
const char* family_name(Family f);

PureKet sample_pure(Xoshiro256& rng);
// kHaarPure, kUniformBlochBall or kFixedPurity.
QubitState sample_state(Xoshiro256& rng, Family family, double fixed_purity = 1.0);
OrthonormalBasis sample_basis(Xoshiro256& rng);
PureEnsemble sample_ensemble(Xoshiro256& rng);

}  // namespace geocoh::sampling
