#include "geocoh/specs.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace geocoh::specs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_with(double v, int precision) {
  char buf[64];
  const auto res = precision > 0
                       ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision)
                       : std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::array<double, 3> parse_triple(std::string_view body) {
  const auto parts = split(body, ',');
  if (parts.size() != 3) throw SpecError("expected three comma-separated numbers in '" + std::string(body) + "'");
  return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
}

std::array<Complex, 2> parse_ket(std::string_view body) {
  const auto parts = split(body, ',');
  if (parts.size() != 2) throw SpecError("a ket needs two comma-separated amplitudes");
  return {parse_complex(parts[0]), parse_complex(parts[1])};
}

PureKet make_ket(const std::array<Complex, 2>& a) {
  try {
    return PureKet::normalized(a[0], a[1]);
  } catch (const Error& e) {
    throw SpecError(std::string("invalid ket: ") + e.what());
  }
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v))
    throw SpecError("not a finite number: '" + std::string(text) + "'");
  return v;
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw SpecError("empty complex number");
  if (text.back() != 'i' && text.back() != 'j') return {parse_real(text), 0.0};

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_of = [](std::string_view s) {
    s = trim(s);
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split_at == std::string_view::npos) return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

std::string format_real_exact(double v) { return format_with(v, 0); }

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_real_exact(z.real());
  std::string im = format_real_exact(z.imag()) + "i";
  if (z.real() == 0.0) return im;
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_real_exact(z.real()) + im;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  return format_with(v, 12);
}

double round_to_printed(double v) {
  const std::string s = format_number(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

// ---------------------------------------------------------------- states

StateSpec parse_state_spec(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw SpecError("state must be bloch:X,Y,Z, matrix:M00,M01,M10,M11 or mcm:Q");
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  if (kind == "bloch") return BlochSpec{parse_triple(body)};
  if (kind == "mcm") {
    const double q = parse_real(body);
    if (!(q >= 0.0 && q <= 1.0)) throw SpecError("mcm parameter q must lie in [0, 1]");
    return McmSpec{q};
  }
  if (kind == "matrix") {
    const auto parts = split(body, ',');
    if (parts.size() != 4) throw SpecError("matrix state needs four comma-separated entries");
    return MatrixSpec{{parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2]),
                       parse_complex(parts[3])}};
  }
  throw SpecError("unknown state kind '" + std::string(kind) + "'");
}

std::string format_state_spec(const StateSpec& spec) {
  if (const auto* b = std::get_if<BlochSpec>(&spec))
    return "bloch:" + format_real_exact(b->r[0]) + "," + format_real_exact(b->r[1]) + "," +
           format_real_exact(b->r[2]);
  if (const auto* m = std::get_if<McmSpec>(&spec)) return "mcm:" + format_real_exact(m->q);
  const auto& e = std::get<MatrixSpec>(spec).entries;
  return "matrix:" + format_complex(e[0]) + "," + format_complex(e[1]) + "," +
         format_complex(e[2]) + "," + format_complex(e[3]);
}

QubitState to_state(const StateSpec& spec) {
  if (const auto* b = std::get_if<BlochSpec>(&spec))
    return QubitState::from_bloch(b->r[0], b->r[1], b->r[2]);
  if (const auto* m = std::get_if<McmSpec>(&spec)) return QubitState::maximally_coherent_mixed(m->q);
  const auto& e = std::get<MatrixSpec>(spec).entries;
  return QubitState(Matrix2(e[0], e[1], e[2], e[3]));
}

// ---------------------------------------------------------------- bases

OrthonormalBasis named_basis(NamedBasis which) {
  const double h = 1.0 / std::sqrt(2.0);
  const double f = 1.0 / std::sqrt(5.0);
  switch (which) {
    case NamedBasis::kComputational: return OrthonormalBasis::computational();
    case NamedBasis::kHadamard: return {PureKet(h, h), PureKet(h, -h)};
    case NamedBasis::kCircular: return {PureKet(h, Complex(0.0, h)), PureKet(h, Complex(0.0, -h))};
    case NamedBasis::kEx2y: return {PureKet(f, 2.0 * f), PureKet(-2.0 * f, f)};
  }
  throw SpecError("unknown named basis");
}

BasisSpec parse_basis_spec(std::string_view text) {
  text = trim(text);
  if (text == "computational") return NamedBasis::kComputational;
  if (text == "hadamard") return NamedBasis::kHadamard;
  if (text == "circular") return NamedBasis::kCircular;
  if (text == "ex2y") return NamedBasis::kEx2y;
  if (text.substr(0, 5) == "kets:") {
    const auto kets = split(text.substr(5), ';');
    if (kets.size() != 2) throw SpecError("kets basis needs two ';'-separated kets");
    return KetsSpec{parse_ket(kets[0]), parse_ket(kets[1])};
  }
  throw SpecError("basis must be computational, hadamard, circular, ex2y or kets:A0,A1;B0,B1 (got '" +
                  std::string(text) + "')");
}

std::string format_basis_spec(const BasisSpec& spec) {
  if (const auto* n = std::get_if<NamedBasis>(&spec)) {
    switch (*n) {
      case NamedBasis::kComputational: return "computational";
      case NamedBasis::kHadamard: return "hadamard";
      case NamedBasis::kCircular: return "circular";
      case NamedBasis::kEx2y: return "ex2y";
    }
  }
  const auto& k = std::get<KetsSpec>(spec);
  return "kets:" + format_complex(k.first[0]) + "," + format_complex(k.first[1]) + ";" +
         format_complex(k.second[0]) + "," + format_complex(k.second[1]);
}

OrthonormalBasis to_basis(const BasisSpec& spec) {
  if (const auto* n = std::get_if<NamedBasis>(&spec)) return named_basis(*n);
  const auto& k = std::get<KetsSpec>(spec);
  return {make_ket(k.first), make_ket(k.second)};
}

}  // namespace geocoh::specs
