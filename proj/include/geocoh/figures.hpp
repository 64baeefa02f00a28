#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geocoh::figures {

// fig2a: two-basis relation for rho_m with X = {|+>, |->}, Y = ex2y.
// fig2b: same with X = circular basis.
// fig4:  three-basis relation with X = ex2y (swapped), Y = {|->, |+>}, Z = computational.
enum class Figure { kFig2a, kFig2b, kFig4 };

Figure parse_figure(const std::string& name);

struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// q sampled uniformly on [0, 1] at `steps` points inclusive (steps >= 2).
// Columns q,exact,lower,upper for fig2a/fig2b and q,exact,lower for fig4.
FigureTable figure_table(Figure which, int steps);

void write_csv(std::ostream& out, const FigureTable& table);

}  // namespace geocoh::figures
