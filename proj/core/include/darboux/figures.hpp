#pragma once

// Plot-ready data for the five standard pictures of the model: curvature,
// oscillator potential, classical and quantum effective potentials, and the
// discrete spectrum. Each figure is a table (first column is the abscissa)
// plus a list of landmark values.

#include <string>
#include <vector>

namespace darboux::figures {

struct Landmark {
  std::string name;
  /// +infinity is a legitimate value (flat asymptotes and thresholds).
  double value = 0.0;
};

struct FigureData {
  int number = 0;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<Landmark> landmarks;

  /// Landmark by name; throws std::out_of_range if absent.
  [[nodiscard]] double landmark(const std::string& name) const;
};

/// Figure 1..5; throws std::out_of_range otherwise.
[[nodiscard]] FigureData make_figure(int number);

/// Comma-separated table with a header line; "inf" marks infinite entries.
[[nodiscard]] std::string to_csv(const FigureData& figure);

}  // namespace darboux::figures
