#include "geocoh/figures.hpp"

#include <ostream>

#include "geocoh/coherence.hpp"
#include "geocoh/specs.hpp"
#include "geocoh/tradeoffs.hpp"

namespace geocoh::figures {

namespace {

using specs::NamedBasis;
using specs::named_basis;

}  // namespace

Figure parse_figure(const std::string& name) {
  if (name == "fig2a") return Figure::kFig2a;
  if (name == "fig2b") return Figure::kFig2b;
  if (name == "fig4") return Figure::kFig4;
  throw DomainError("unknown figure '" + name + "' (expected fig2a, fig2b or fig4)");
}

FigureTable figure_table(Figure which, int steps) {
  if (steps < 2) throw DomainError("steps must be at least 2");
  FigureTable table;
  const auto y = named_basis(NamedBasis::kEx2y);
  if (which == Figure::kFig4) {
    table.columns = {"q", "exact", "lower"};
    const auto bx = y.swapped();
    const auto by = named_basis(NamedBasis::kHadamard).swapped();
    const auto bz = named_basis(NamedBasis::kComputational);
    const auto cv = incompatibility_vector(bx, by, bz);
    for (int k = 0; k < steps; ++k) {
      const double q = k == steps - 1 ? 1.0 : static_cast<double>(k) / (steps - 1);
      const auto rho = QubitState::maximally_coherent_mixed(q);
      const double exact = geometric_coherence(rho, bx).value + geometric_coherence(rho, by).value +
                           geometric_coherence(rho, bz).value;
      table.rows.push_back({q, exact, theorem3_lower_bound(purity(rho), cv)});
    }
    return table;
  }

  table.columns = {"q", "exact", "lower", "upper"};
  const auto x = named_basis(which == Figure::kFig2a ? NamedBasis::kHadamard : NamedBasis::kCircular);
  const double c = incompatibility(x, y).value;
  for (int k = 0; k < steps; ++k) {
    const double q = k == steps - 1 ? 1.0 : static_cast<double>(k) / (steps - 1);
    const auto rho = QubitState::maximally_coherent_mixed(q);
    const double p = purity(rho);
    const double exact = geometric_coherence(rho, x).value + geometric_coherence(rho, y).value;
    table.rows.push_back({q, exact, theorem2_lower_bound(p, c), 2.0 * theorem1_upper_bound(p)});
  }
  return table;
}

void write_csv(std::ostream& out, const FigureTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << specs::format_number(row[i]);
    out << '\n';
  }
}

}  // namespace geocoh::figures
