#pragma once

// Text forms of states and bases accepted on the command line.
//
//   state:  bloch:X,Y,Z | matrix:M00,M01,M10,M11 | mcm:Q
//   basis:  computational | hadamard | circular | ex2y | kets:A0,A1;B0,B1
//
// Complex numbers are written as 0.5, -2i, 0.3+0.4i, 1e-3-2i. Kets given with
// "kets:" are normalized; orthogonality is checked.

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "geocoh/qubit.hpp"

namespace geocoh::specs {

class SpecError : public Error {
 public:
  using Error::Error;
};

Complex parse_complex(std::string_view text);
double parse_real(std::string_view text);
// Shortest text that parses back to the same value.
std::string format_complex(Complex z);
std::string format_real_exact(double v);
// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_number(double v);
double round_to_printed(double v);

struct BlochSpec {
  std::array<double, 3> r;
};
struct MatrixSpec {
  std::array<Complex, 4> entries;  // row-major
};
struct McmSpec {
  double q;
};
using StateSpec = std::variant<BlochSpec, MatrixSpec, McmSpec>;

StateSpec parse_state_spec(std::string_view text);
std::string format_state_spec(const StateSpec& spec);
// Throws InvalidState (or SpecError) naming the violated invariant.
QubitState to_state(const StateSpec& spec);

enum class NamedBasis { kComputational, kHadamard, kCircular, kEx2y };
struct KetsSpec {
  std::array<Complex, 2> first;
  std::array<Complex, 2> second;
};
using BasisSpec = std::variant<NamedBasis, KetsSpec>;

BasisSpec parse_basis_spec(std::string_view text);
std::string format_basis_spec(const BasisSpec& spec);
OrthonormalBasis to_basis(const BasisSpec& spec);
OrthonormalBasis named_basis(NamedBasis which);

}  // namespace geocoh::specs
