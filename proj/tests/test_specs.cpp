#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clocale>
#include <cmath>
#include <sstream>

#include "geocoh/figures.hpp"
#include "geocoh/specs.hpp"
#include "geocoh/tradeoffs.hpp"
#include "support.hpp"

using namespace geocoh;
using namespace geocoh::specs;

TEST_CASE("parse_complex forms") {
  CHECK(parse_complex("0.5") == Complex(0.5, 0.0));
  CHECK(parse_complex("-2i") == Complex(0.0, -2.0));
  CHECK(parse_complex("0.3+0.4i") == Complex(0.3, 0.4));
  CHECK(parse_complex("1e-3-2i") == Complex(1e-3, -2.0));
  CHECK(parse_complex("1e+2+1e-1i") == Complex(100.0, 0.1));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2-i") == Complex(2.0, -1.0));
  CHECK(parse_complex(" 0.25j ") == Complex(0.0, 0.25));
  CHECK(parse_complex("+3") == Complex(3.0, 0.0));
  for (const char* bad : {"", "abc", "1..2", "nan", "inf", "1+2", "0.5x", "--1"})
    CHECK_THROWS_AS(parse_complex(bad), SpecError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0 / 3.0 * 1e-7) == "6.66666666667e-08");
  CHECK(round_to_printed(1.0 / 3.0) == 0.333333333333);
  CHECK(format_real_exact(0.1) == "0.1");
  CHECK(parse_real(format_real_exact(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_complex(Complex(0.3, -0.4)) == "0.3-0.4i");
  CHECK(format_complex(Complex(0.0, 2.0)) == "2i");
  CHECK(format_complex(Complex(-1.5, 0.0)) == "-1.5");
}

TEST_CASE("formatting ignores the global locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(format_number(0.5) == "0.5");
    CHECK(parse_real("0.5") == 0.5);
  }
  std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("state specs") {
  const auto mcm = to_state(parse_state_spec("mcm:0.6"));
  CHECK(max_abs_diff(mcm.matrix(), Matrix2(0.5, 0.3, 0.3, 0.5)) < 1e-16);
  const auto bloch = to_state(parse_state_spec("bloch:0,0,1"));
  CHECK(max_abs_diff(bloch.matrix(), Matrix2::diagonal(1.0, 0.0)) == 0.0);
  const auto m = to_state(parse_state_spec("matrix:0.5,0.25-0.25i,0.25+0.25i,0.5"));
  CHECK(m.matrix()(0, 1) == Complex(0.25, -0.25));

  CHECK_THROWS_AS(parse_state_spec("bloch:1,2"), SpecError);
  CHECK_THROWS_AS(parse_state_spec("mcm:1.5"), SpecError);
  CHECK_THROWS_AS(parse_state_spec("pure:1,0"), SpecError);
  CHECK_THROWS_AS(parse_state_spec("0.5"), SpecError);
  CHECK_THROWS_AS(to_state(parse_state_spec("bloch:1,1,0")), InvalidState);
  CHECK_THROWS_AS(to_state(parse_state_spec("matrix:0.5,0.1,0.2,0.5")), InvalidState);
  CHECK_THROWS_AS(to_state(parse_state_spec("matrix:1.2,0,0,-0.2")), InvalidState);
}

TEST_CASE("state specs round-trip through their canonical text") {
  sampling::Xoshiro256 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto s = sampling::sample_state(rng, sampling::Family::kUniformBlochBall);
    const auto r = s.bloch();
    const StateSpec b = BlochSpec{r};
    const auto back = parse_state_spec(format_state_spec(b));
    CHECK(std::get<BlochSpec>(back).r == r);
    const auto& mm = s.matrix();
    const StateSpec ms = MatrixSpec{{mm(0, 0), mm(0, 1), mm(1, 0), mm(1, 1)}};
    const auto mback = parse_state_spec(format_state_spec(ms));
    CHECK(std::get<MatrixSpec>(mback).entries == std::get<MatrixSpec>(ms).entries);
  }
  CHECK(format_state_spec(parse_state_spec("mcm:0.6")) == "mcm:0.6");
}

TEST_CASE("basis specs") {
  const double h = 1.0 / std::sqrt(2.0);
  const auto had = to_basis(parse_basis_spec("hadamard"));
  CHECK(std::abs(had[1][1] + h) < 1e-16);
  const auto circ = to_basis(parse_basis_spec("circular"));
  CHECK(std::abs(circ[0][1] - Complex(0.0, h)) < 1e-16);
  const auto ex = to_basis(parse_basis_spec("ex2y"));
  CHECK(std::abs(overlap2(ex[0], PureKet::normalized(1.0, 2.0)) - 1.0) < 1e-15);
  CHECK(std::abs(overlap2(ex[1], PureKet::normalized(-2.0, 1.0)) - 1.0) < 1e-15);

  const auto kets = to_basis(parse_basis_spec("kets:1,1;1,-1"));
  CHECK(std::abs(kets[0][0] - h) < 1e-16);
  CHECK_THROWS_AS(to_basis(parse_basis_spec("kets:1,0;1,1")), InvalidBasis);
  CHECK_THROWS_AS(to_basis(parse_basis_spec("kets:0,0;1,1")), SpecError);
  CHECK_THROWS_AS(parse_basis_spec("kets:1,0"), SpecError);
  CHECK_THROWS_AS(parse_basis_spec("diagonal"), SpecError);

  for (const char* name : {"computational", "hadamard", "circular", "ex2y", "kets:0.6,0.8i;0.8,-0.6i"})
    CHECK(format_basis_spec(parse_basis_spec(name)) == name);
}

namespace {

using namespace geocoh::testing;

double both(double q) { return mcm_coherence(q) + mcm_ex2y_coherence(q); }

}  // namespace

TEST_CASE("figure tables match the closed forms") {
  using figures::Figure;
  const int steps = 101;
  const auto a = figures::figure_table(Figure::kFig2a, steps);
  const auto b = figures::figure_table(Figure::kFig2b, steps);
  const auto f4 = figures::figure_table(Figure::kFig4, steps);
  CHECK(a.columns == std::vector<std::string>{"q", "exact", "lower", "upper"});
  CHECK(f4.columns == std::vector<std::string>{"q", "exact", "lower"});
  REQUIRE(a.rows.size() == steps);
  for (int k = 0; k < steps; ++k) {
    const double q = a.rows[k][0];
    CHECK(std::abs(q - k / 100.0) < 1e-15);
    CHECK(std::abs(a.rows[k][1] - mcm_ex2y_coherence(q)) < 1e-10);
    CHECK(std::abs(a.rows[k][2] - mcm_bound_c910(q)) < 1e-10);
    CHECK(std::abs(a.rows[k][3] - mcm_two_basis_ceiling(q)) < 1e-10);
    CHECK(std::abs(b.rows[k][1] - both(q)) < 1e-10);
    CHECK(std::abs(b.rows[k][2] - mcm_bound_c12(q)) < 1e-10);
    CHECK(std::abs(b.rows[k][3] - mcm_two_basis_ceiling(q)) < 1e-10);
    CHECK(std::abs(f4.rows[k][1] - both(q)) < 1e-10);
    CHECK(std::abs(f4.rows[k][2] - mcm_three_basis_bound(q)) < 1e-10);
  }
  CHECK(a.rows.back()[0] == 1.0);
  CHECK(std::abs(a.rows.back()[1] - 0.1) < 1e-12);
  CHECK(std::abs(a.rows.back()[3] - 1.0) < 1e-12);
  CHECK(std::abs(b.rows.back()[1] - 0.6) < 1e-12);
  CHECK(std::abs(f4.rows[0][1]) < 1e-10);
  CHECK(std::abs(f4.rows[0][2]) < 1e-10);
}

TEST_CASE("figure CSV text") {
  std::ostringstream out;
  figures::write_csv(out, figures::figure_table(figures::Figure::kFig2b, 3));
  const std::string text = out.str();
  CHECK(text.rfind("q,exact,lower,upper\n", 0) == 0);
  CHECK(text.find("\n1,0.6,") != std::string::npos);
  CHECK_THROWS_AS(figures::figure_table(figures::Figure::kFig4, 1), DomainError);
  CHECK_THROWS_AS(figures::parse_figure("fig3"), DomainError);
}
