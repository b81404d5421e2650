#include "darboux/figures.hpp"

#include "darboux/model.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace darboux::figures {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string lambda_label(const std::string& prefix, double lambda) {
  std::ostringstream out;
  out << prefix << "_lambda=" << lambda;
  return out.str();
}

// Samples every curve on r = r0, r0 + dr, ..., r1.
void tabulate(FigureData& fig, double r0, double r1, double dr,
              const std::vector<std::function<double(double)>>& curves) {
  const int count = static_cast<int>(std::lround((r1 - r0) / dr));
  for (int i = 0; i <= count; ++i) {
    const double r = r0 + dr * i;
    std::vector<double> row{r};
    for (const auto& f : curves) row.push_back(f(r));
    fig.rows.push_back(std::move(row));
  }
}

ModelParams with(double lambda, int dim = 3) {
  ModelParams p;
  p.dim = dim;
  p.lambda = lambda;
  return p;
}

FigureData curvature() {
  FigureData fig{1, "scalar curvature R(r), N = 3, lambda = 0.1", {"r", "R"}, {}, {}};
  const ModelParams p = with(0.1);
  tabulate(fig, 0.0, 10.0, 0.05, {[p](double r) { return scalar_curvature(p, r); }});
  fig.landmarks = {{"R(0)", scalar_curvature(p, 0.0)}, {"r_min", 0.0}};
  return fig;
}

FigureData oscillator() {
  FigureData fig{2, "oscillator potential U(r), omega = 1", {"r"}, {}, {}};
  std::vector<std::function<double(double)>> curves;
  for (double lambda : {0.0, 0.02, 0.04, 0.06, 0.1}) {
    const ModelParams p = with(lambda);
    fig.columns.push_back(lambda_label("U", lambda));
    curves.emplace_back([p](double r) { return oscillator_potential(p, r); });
    const auto limit = continuum_threshold(p);
    fig.landmarks.push_back({lambda_label("U(inf)", lambda), limit.value_or(kInf)});
  }
  tabulate(fig, 0.0, 20.0, 0.05, curves);
  return fig;
}

FigureData classical_effective() {
  constexpr double c_n = 100.0;
  FigureData fig{3, "classical effective potential, c_N = 100, omega = 1", {"r"}, {}, {}};
  std::vector<std::function<double(double)>> curves;
  for (double lambda : {0.02, 0.0}) {
    const ModelParams p = with(lambda);
    fig.columns.push_back(lambda_label("U_eff", lambda));
    curves.emplace_back([p](double r) { return classical_effective_potential(p, c_n, r); });
    const auto m = classical_effective_minimum(p, c_n);
    fig.landmarks.push_back({lambda_label("r_min", lambda), m.r_min});
    fig.landmarks.push_back({lambda_label("u_min", lambda), m.u_min});
    fig.landmarks.push_back({lambda_label("u(inf)", lambda), continuum_threshold(p).value_or(kInf)});
  }
  tabulate(fig, 1.0, 20.0, 0.05, curves);
  return fig;
}

FigureData quantum_effective() {
  constexpr int l = 10;
  FigureData fig{4, "quantum effective potential, N = 3, l = 10, hbar = omega = 1", {"r"}, {}, {}};
  std::vector<std::function<double(double)>> curves;
  for (double lambda : {0.02, 0.0}) {
    const ModelParams p = with(lambda);
    fig.columns.push_back(lambda_label("U_eff", lambda));
    curves.emplace_back([p](double r) { return quantum_effective_potential(p, l, r); });
    const auto m = quantum_effective_minimum(p, l);
    fig.landmarks.push_back({lambda_label("r_min", lambda), m.r_min});
    fig.landmarks.push_back({lambda_label("u_min", lambda), m.u_min});
    fig.landmarks.push_back({lambda_label("u(inf)", lambda), continuum_threshold(p).value_or(kInf)});
  }
  tabulate(fig, 1.0, 20.0, 0.05, curves);
  return fig;
}

FigureData spectrum() {
  FigureData fig{5, "discrete spectrum E_n, N = 3, hbar = omega = 1", {"n"}, {}, {}};
  const std::vector<double> lambdas{0.0, 0.01, 0.02, 0.04};
  for (double lambda : lambdas) {
    fig.columns.push_back(lambda_label("E", lambda));
    const ModelParams p = with(lambda);
    fig.landmarks.push_back({lambda_label("E_0", lambda), closed_form_energy(p, 0)});
  }
  for (double lambda : lambdas)
    fig.landmarks.push_back({lambda_label("E_inf", lambda), continuum_threshold(with(lambda)).value_or(kInf)});
  for (int n = 0; n <= 25; ++n) {
    std::vector<double> row{static_cast<double>(n)};
    for (double lambda : lambdas) row.push_back(closed_form_energy(with(lambda), n));
    fig.rows.push_back(std::move(row));
  }
  return fig;
}

}  // namespace

double FigureData::landmark(const std::string& name) const {
  for (const auto& l : landmarks)
    if (l.name == name) return l.value;
  throw std::out_of_range("figure " + std::to_string(number) + ": no landmark " + name);
}

FigureData make_figure(int number) {
  switch (number) {
    case 1: return curvature();
    case 2: return oscillator();
    case 3: return classical_effective();
    case 4: return quantum_effective();
    case 5: return spectrum();
    default: throw std::out_of_range("figure number must be 1..5");
  }
}

std::string to_csv(const FigureData& figure) {
  std::ostringstream out;
  out << std::setprecision(12);
  for (std::size_t i = 0; i < figure.columns.size(); ++i) out << (i ? "," : "") << figure.columns[i];
  out << '\n';
  for (const auto& row : figure.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (std::isinf(row[i]))
        out << (row[i] > 0 ? "inf" : "-inf");
      else
        out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace darboux::figures
