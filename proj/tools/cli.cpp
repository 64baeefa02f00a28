#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include "geocoh/coherence.hpp"
#include "geocoh/discrimination.hpp"
#include "geocoh/figures.hpp"
#include "geocoh/sampling.hpp"
#include "geocoh/specs.hpp"
#include "geocoh/tradeoffs.hpp"
#include "geocoh/verify.hpp"

namespace geocoh::cli {

namespace {

using json = nlohmann::ordered_json;

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return specs::round_to_printed(v);
}

json vec(const std::array<double, 3>& v) { return json::array({num(v[0]), num(v[1]), num(v[2])}); }

std::string human_value(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_number_float()) return specs::format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + human_value(v[i]);
    return s;
  }
  return v.dump();
}

void emit(std::ostream& out, const json& report, bool as_json) {
  if (as_json) {
    out << report.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& item : report.items()) width = std::max(width, item.key().size());
  for (const auto& item : report.items())
    out << std::left << std::setw(static_cast<int>(width) + 2) << item.key() << human_value(item.value())
        << '\n';
}

struct Ensemble {
  std::string description;
  PureEnsemble value;
};

// w1:A0,A1;w2:B0,B1
PureEnsemble parse_ensemble(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw specs::SpecError("ensemble needs two ';'-separated members");
  std::vector<EnsembleMember> members;
  for (const auto& part : {text.substr(0, semi), text.substr(semi + 1)}) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw specs::SpecError("ensemble member must be WEIGHT:A0,A1");
    const double w = specs::parse_real(part.substr(0, colon));
    const auto amps = part.substr(colon + 1);
    const auto comma = amps.find(',');
    if (comma == std::string::npos) throw specs::SpecError("a ket needs two comma-separated amplitudes");
    members.push_back({w, PureKet::normalized(specs::parse_complex(amps.substr(0, comma)),
                                              specs::parse_complex(amps.substr(comma + 1)))});
  }
  return PureEnsemble(std::move(members));
}

std::string theorem3_case_name(Theorem3Case c) {
  switch (c) {
    case Theorem3Case::kFirst: return "first";
    case Theorem3Case::kSecond: return "second";
    case Theorem3Case::kBoundary: return "boundary";
  }
  return "unknown";
}

// ---------------------------------------------------------------- commands

struct CoherenceArgs {
  std::string state;
  std::string basis = "computational";
  bool oracle = false;
  bool json = false;
};

int cmd_coherence(const CoherenceArgs& a, std::ostream& out) {
  const auto state_spec = specs::parse_state_spec(a.state);
  const auto basis_spec = specs::parse_basis_spec(a.basis);
  const QubitState rho = specs::to_state(state_spec);
  const OrthonormalBasis basis = specs::to_basis(basis_spec);

  const auto cg = geometric_coherence(rho, basis);
  const double p = purity(rho);
  json r;
  r["state"] = specs::format_state_spec(state_spec);
  r["basis"] = specs::format_basis_spec(basis_spec);
  r["coherence"] = num(cg.value);
  r["basis_diagonals"] = json::array({num(cg.basis_diagonals[0]), num(cg.basis_diagonals[1])});
  r["purity"] = num(p);
  r["mixedness"] = num(mixedness(rho));
  r["ceiling"] = num(theorem1_upper_bound(p));
  r["saturated"] = theorem1_saturated(rho, basis);
  if (a.oracle) {
    const double o = verification::geometric_coherence_oracle(rho, basis);
    r["oracle"] = num(o);
    r["oracle_abs_diff"] = num(std::abs(o - cg.value));
  }
  emit(out, r, a.json);
  return kOk;
}

struct UncertaintyArgs {
  std::string state;
  std::vector<std::string> bases;
  bool json = false;
};

int cmd_uncertainty(const UncertaintyArgs& a, std::ostream& out) {
  const auto state_spec = specs::parse_state_spec(a.state);
  const QubitState rho = specs::to_state(state_spec);
  std::vector<specs::BasisSpec> specs_list;
  std::vector<OrthonormalBasis> bases;
  for (const auto& b : a.bases) {
    specs_list.push_back(specs::parse_basis_spec(b));
    bases.push_back(specs::to_basis(specs_list.back()));
  }

  json r;
  r["state"] = specs::format_state_spec(state_spec);
  json names = json::array();
  json coherences = json::array();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    names.push_back(specs::format_basis_spec(specs_list[i]));
    coherences.push_back(num(geometric_coherence(rho, bases[i]).value));
  }
  r["bases"] = names;
  r["coherences"] = coherences;
  r["purity"] = num(purity(rho));

  BoundReport rep;
  if (bases.size() == 2) {
    r["incompatibility"] = num(incompatibility(bases[0], bases[1]).value);
    rep = theorem2_check(rho, bases[0], bases[1]);
  } else {
    const auto cv = incompatibility_vector(bases[0], bases[1], bases[2]);
    r["incompatibility_vector"] = vec(cv.values());
    r["case"] = theorem3_case_name(theorem3_case(cv));
    rep = theorem3_check(rho, bases[0], bases[1], bases[2]);
  }
  r["sum"] = num(rep.lhs);
  r["lower_bound"] = num(rep.bound);
  r["slack"] = num(rep.slack);
  r["saturated"] = rep.saturated;
  emit(out, r, a.json);
  return rep.holds() ? kOk : kVerificationFailed;
}

struct VerifyArgs {
  std::string campaign;
  std::optional<int> samples;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string state;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto which = verification::parse_campaign(a.campaign);
  verification::CampaignOptions opt;
  opt.seed = a.seed;
  opt.threads = a.threads;
  const bool sweep = which == verification::Campaign::kOracle2 ||
                     which == verification::Campaign::kOracle3;
  opt.samples = a.samples.value_or(sweep ? 4 : 10000);
  if (!a.state.empty()) {
    if (!verification::campaign_uses_state(which))
      throw specs::SpecError(std::string("campaign ") + a.campaign + " does not take --state");
    opt.forced_state = specs::to_state(specs::parse_state_spec(a.state));
  }

  const auto before = diagnostics().total();
  const auto rep = verification::run_campaign(which, opt);
  json r;
  r["campaign"] = rep.name;
  r["seed"] = a.seed;
  r["samples"] = rep.samples;
  r["skipped"] = rep.skipped;
  r["worst_slack"] = num(rep.worst_slack);
  r["worst_index"] = rep.worst_index;
  r["max_abs_diff"] = num(rep.max_abs_diff);
  r["tolerance"] = num(rep.tolerance);
  r["violations"] = rep.violations;
  r["saturated"] = rep.saturated;
  r["clamps"] = diagnostics().total() - before;
  r["passed"] = rep.passed();
  emit(out, r, a.json);
  return rep.passed() ? kOk : kVerificationFailed;
}

struct FigureArgs {
  std::string which;
  int steps = 101;
  std::string out_path;
  bool json = false;
};

int cmd_figure(const FigureArgs& a, std::ostream& out, std::ostream& err) {
  const auto table = figures::figure_table(figures::parse_figure(a.which), a.steps);
  if (a.out_path.empty()) {
    figures::write_csv(out, table);
    return kOk;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << a.out_path << "' for writing\n";
    return kInputError;
  }
  figures::write_csv(file, table);
  file.close();
  if (!file) {
    err << "error: failed writing '" << a.out_path << "'\n";
    return kInputError;
  }
  json r;
  r["figure"] = a.which;
  r["rows"] = table.rows.size();
  r["out"] = a.out_path;
  emit(out, r, a.json);
  return kOk;
}

struct DiscriminateArgs {
  std::optional<double> example4;
  std::string basis = "computational";
  std::string ensemble;
  bool random = false;
  std::uint64_t seed = 0;
  bool json = false;
};

int cmd_discriminate(const DiscriminateArgs& a, std::ostream& out) {
  const int chosen = (a.example4 ? 1 : 0) + (a.ensemble.empty() ? 0 : 1) + (a.random ? 1 : 0);
  if (chosen != 1)
    throw specs::SpecError("choose exactly one of --example4, --ensemble, --random");

  std::optional<PureEnsemble> ens;
  json r;
  if (a.example4) {
    ens = symmetric_ensemble(*a.example4, specs::to_basis(specs::parse_basis_spec(a.basis)));
    r["source"] = "example4";
    r["theta"] = num(*a.example4);
  } else if (a.random) {
    sampling::Xoshiro256 rng(a.seed);
    ens = sampling::sample_ensemble(rng);
    r["source"] = "random";
    r["seed"] = a.seed;
  } else {
    ens = parse_ensemble(a.ensemble);
    r["source"] = "ensemble";
  }

  const auto d = min_error_probability(*ens);
  const double helstrom = helstrom_error_probability(*ens);
  const auto c4 = corollary4_check(*ens);
  r["weights"] = json::array({num((*ens)[0].weight), num((*ens)[1].weight)});
  r["error_probability"] = num(d.error_probability);
  r["helstrom_closed_form"] = num(helstrom);
  r["helstrom_abs_diff"] = num(std::abs(helstrom - d.error_probability));
  r["optimal_projector_bloch"] = vec(d.optimal_projector_bloch);
  r["success_check"] = num(success_probability(*ens, d.optimal_projector_bloch));
  r["purity"] = num(c4.purity);
  r["ceiling"] = num(c4.purity_form.bound);
  r["slack"] = num(c4.purity_form.slack);
  r["mixedness_slack"] = num(c4.mixedness_form.slack);
  r["saturated"] = c4.purity_form.saturated;
  emit(out, r, a.json);
  return c4.purity_form.holds() && c4.mixedness_form.holds() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric coherence of qubit states: bounds, uncertainty relations and checks",
               "geocoh"};
  app.require_subcommand(1);

  CoherenceArgs coh;
  auto* c = app.add_subcommand("coherence", "Geometric coherence of a state in a basis");
  c->add_option("--state", coh.state, "bloch:X,Y,Z | matrix:M00,M01,M10,M11 | mcm:Q")->required();
  c->add_option("--basis", coh.basis, "computational | hadamard | circular | ex2y | kets:A0,A1;B0,B1")
      ->capture_default_str();
  c->add_flag("--oracle", coh.oracle, "Also maximize the fidelity over incoherent states directly");
  c->add_flag("--json", coh.json, "Single-line JSON output");

  UncertaintyArgs unc;
  auto* u = app.add_subcommand("uncertainty", "Two- or three-basis uncertainty relation");
  u->add_option("--state", unc.state, "State spec")->required();
  u->add_option("--bases,--basis", unc.bases, "Two or three basis specs")->required()->expected(2, 3);
  u->add_flag("--json", unc.json, "Single-line JSON output");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a seeded verification campaign");
  v->add_option("theorem", ver.campaign, "t1 | c1 | l1 | t2 | t3 | lemma2 | c4 | oracle1 | oracle2 | oracle3")
      ->required();
  v->add_option("--samples", ver.samples,
                "Random samples (oracle2/oracle3: extra samples beyond the fixed sweep)")
      ->check(CLI::PositiveNumber);
  v->add_option("--seed", ver.seed, "Campaign seed")->capture_default_str();
  v->add_option("--threads", ver.threads, "Worker threads (0 = all cores)")->capture_default_str();
  v->add_option("--state", ver.state, "Force every sampled state to this one");
  v->add_flag("--json", ver.json, "Single-line JSON output");

  FigureArgs fig;
  auto* f = app.add_subcommand("figure", "Write figure data as CSV");
  f->add_option("which", fig.which, "fig2a | fig2b | fig4")->required();
  f->add_option("--steps", fig.steps, "Number of q values on [0, 1]")
      ->capture_default_str()
      ->check(CLI::Range(2, 10000000));
  f->add_option("--out", fig.out_path, "Output path (stdout when omitted)");
  f->add_flag("--json", fig.json, "Single-line JSON summary");

  DiscriminateArgs dis;
  auto* d = app.add_subcommand("discriminate", "Minimum-error discrimination of a two-state ensemble");
  d->add_option("--example4", dis.example4, "theta for the symmetric ensemble");
  d->add_option("--basis", dis.basis, "Reference basis for --example4")->capture_default_str();
  d->add_option("--ensemble", dis.ensemble, "W1:A0,A1;W2:B0,B1");
  d->add_flag("--random", dis.random, "Draw a random ensemble from --seed");
  d->add_option("--seed", dis.seed, "Seed for --random")->capture_default_str();
  d->add_flag("--json", dis.json, "Single-line JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (c->parsed()) return cmd_coherence(coh, out);
    if (u->parsed()) return cmd_uncertainty(unc, out);
    if (v->parsed()) return cmd_verify(ver, out);
    if (f->parsed()) return cmd_figure(fig, out, err);
    if (d->parsed()) return cmd_discriminate(dis, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace geocoh::cli
