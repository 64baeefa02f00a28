#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "geocoh/sampling.hpp"
#include "geocoh/tradeoffs.hpp"
#include "support.hpp"

using namespace geocoh;
using namespace geocoh::sampling;

namespace {

void check_ket(const PureKet& k, double r0, double i0, double r1, double i1) {
  CHECK(k[0].real() == r0);
  CHECK(k[0].imag() == i0);
  CHECK(k[1].real() == r1);
  CHECK(k[1].imag() == i1);
}

}  // namespace

TEST_CASE("splitmix64 reference sequence") {
  std::uint64_t s = 1234567;
  const std::uint64_t expect[] = {6457827717110365317ULL, 3203168211198807973ULL, 9817491932198370423ULL,
                                  4593380528125082431ULL, 16408922859458223821ULL};
  for (auto e : expect) CHECK(splitmix64(s) == e);
}

TEST_CASE("xoshiro256** golden outputs") {
  Xoshiro256 rng(42);
  const std::uint64_t expect[] = {1546998764402558742ULL, 6990951692964543102ULL, 12544586762248559009ULL,
                                  17057574109182124193ULL};
  for (auto e : expect) CHECK(rng() == e);
  CHECK(derive_seed(42, 0) == 13679457532755275413ULL);
}

TEST_CASE("uniform and normal draws") {
  Xoshiro256 rng(1);
  double sum = 0.0, sum2 = 0.0, nsum = 0.0, nsum2 = 0.0;
  bool in_range = true;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    in_range = in_range && u >= 0.0 && u < 1.0;
    sum += u;
    sum2 += u * u;
    const double z = rng.normal();
    nsum += z;
    nsum2 += z * z;
  }
  CHECK(in_range);
  CHECK(std::abs(sum / n - 0.5) < 0.005);
  CHECK(std::abs(sum2 / n - 1.0 / 3.0) < 0.005);
  CHECK(std::abs(nsum / n) < 0.01);
  CHECK(std::abs(nsum2 / n - 1.0) < 0.02);
}

TEST_CASE("golden samples for seed 42") {
  {
    Xoshiro256 rng(42);
    check_ket(sample_pure(rng), 0x1.c30ea52d1f36fp-2, 0.0, -0x1.f0ed7a9b44dcp-8, -0x1.cba2f64919f4ap-1);
  }
  {
    Xoshiro256 rng(42);
    const auto b = sample_basis(rng);
    check_ket(b[0], 0x1.c30ea52d1f36fp-2, 0.0, -0x1.f0ed7a9b44dcp-8, -0x1.cba2f64919f4ap-1);
    check_ket(b[1], 0x1.cba728c13ca91p-1, 0.0, 0x1.e7a284b88564p-9, 0x1.c30a86ccd56b8p-2);
  }
  {
    Xoshiro256 rng(42);
    const auto e = sample_ensemble(rng);
    CHECK(e[0].weight == 0x1.6a42be8449c06p-1);
    CHECK(e[1].weight == 0x1.2b7a82f76c7f4p-2);
    check_ket(e[0].ket, 0x1.c30ea52d1f36fp-2, 0.0, -0x1.f0ed7a9b44dcp-8, -0x1.cba2f64919f4ap-1);
    check_ket(e[1].ket, 0x1.e2ea8493752b3p-1, 0.0, 0x1.53df7c99149f2p-2, -0x1.e5e6522dbe95p-7);
  }
}

TEST_CASE("sample_pure normalization, phase and sphere moment") {
  Xoshiro256 rng(2);
  double worst = 0.0, mean = 0.0;
  bool phased = true;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const PureKet k = sample_pure(rng);
    worst = std::max(worst, std::abs(std::norm(k[0]) + std::norm(k[1]) - 1.0));
    phased = phased && k[0].imag() == 0.0 && k[0].real() >= 0.0;
    mean += overlap2(PureKet::zero(), k);
  }
  CHECK(worst < 1e-12);
  CHECK(phased);
  CHECK(std::abs(mean / n - 0.5) < 0.01);
}

TEST_CASE("sample_state families") {
  Xoshiro256 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const QubitState mixed = sample_state(rng, Family::kFixedPurity, 0.5);
    CHECK(max_abs_diff(mixed.matrix(), QubitState::maximally_mixed().matrix()) < 1e-15);
    CHECK(std::abs(purity(sample_state(rng, Family::kFixedPurity, 1.0)) - 1.0) < 1e-12);
    CHECK(std::abs(purity(sample_state(rng, Family::kFixedPurity, 0.8)) - 0.8) < 1e-12);
    CHECK(std::abs(purity(sample_state(rng, Family::kHaarPure)) - 1.0) < 1e-12);
  }
  double mean = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) mean += purity(sample_state(rng, Family::kUniformBlochBall));
  CHECK(std::abs(mean / n - 0.8) < 0.01);

  CHECK_THROWS_AS(sample_state(rng, Family::kFixedPurity, 0.4), DomainError);
  CHECK_THROWS_AS(sample_state(rng, Family::kHaarBasis), DomainError);
}

TEST_CASE("sample_basis incompatibility moment") {
  Xoshiro256 rng(4);
  double mean = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) mean += incompatibility(sample_basis(rng), sample_basis(rng)).value;
  CHECK(std::abs(mean / n - 0.75) < 0.01);
}

TEST_CASE("sample_ensemble weights and induced states") {
  Xoshiro256 rng(5);
  bool ok = true;
  for (int i = 0; i < 100000; ++i) {
    const auto e = sample_ensemble(rng);
    ok = ok && e[0].weight + e[1].weight == 1.0;
    ok = ok && e[0].weight >= 10 * tol::kWeight && e[1].weight >= 10 * tol::kWeight - 1e-16;
    const QubitState rho(Complex(e[0].weight) * e[0].ket.projector() + Complex(e[1].weight) * e[1].ket.projector());
    ok = ok && purity(rho) >= 0.5;
  }
  CHECK(ok);
}

TEST_CASE("streams are deterministic and distinct") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Xoshiro256 a(derive_seed(7, i)), b(derive_seed(7, i)), c(derive_seed(7, i + 1));
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
}

TEST_CASE("SampleConfig validation and family names") {
  SampleConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.count = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg.count = 1;
  cfg.family = Family::kFixedPurity;
  cfg.fixed_purity = 1.2;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  for (auto f : {Family::kHaarPure, Family::kUniformBlochBall, Family::kFixedPurity, Family::kHaarBasis,
                 Family::kRandomEnsemble})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("gaussian"), DomainError);
}
