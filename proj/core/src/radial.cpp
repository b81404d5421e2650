#include "darboux/radial.hpp"

#include "darboux/quantization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace darboux::spectra {

namespace {

void check_inputs(const ModelParams& params, int l) {
  params.validate();
  if (l < 0) throw std::invalid_argument("radial problem: l must be >= 0");
  if (!(params.omega > 0.0)) throw std::invalid_argument("radial problem: omega must be > 0");
}

double richardson(double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; }

double measured_order(double e0, double e1, double e2) {
  const double num = e0 - e1;
  const double den = e1 - e2;
  if (den == 0.0 || num / den <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::log2(num / den);
}

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
}

}  // namespace

std::string_view flavor_name(RadialFlavor f) noexcept {
  switch (f) {
    case RadialFlavor::schrodinger: return "schrodinger";
    case RadialFlavor::tlb: return "tlb";
    case RadialFlavor::tpdm: return "tpdm";
  }
  return "?";
}

std::optional<RadialFlavor> parse_radial_flavor(std::string_view name) noexcept {
  if (name == "schrodinger") return RadialFlavor::schrodinger;
  if (name == "tlb") return RadialFlavor::tlb;
  if (name == "tpdm") return RadialFlavor::tpdm;
  return std::nullopt;
}

double auto_q_max(const ModelParams& params, int l, int levels) {
  check_inputs(params, l);
  if (levels < 1) throw std::invalid_argument("auto_q_max: levels must be >= 1");
  const int n = 2 * (levels - 1) + l;
  const double energy = closed_form_energy(params, n);
  const double beta = std::sqrt(effective_frequency(params, energy) / params.hbar);
  // log of (x^n exp(-x^2/2)) with x = beta r, decreasing past x = sqrt(n).
  const double target = std::log(1e-12);
  double x = std::max(1.0, std::sqrt(static_cast<double>(n)));
  auto log_envelope = [n](double x) { return n * std::log(x) - 0.5 * x * x; };
  while (log_envelope(x) >= target) x += 0.01;
  return flattening_coordinate(params, x / beta);
}

DiscreteRadialProblem effective_1d_problem(const RadialProblem& problem, int levels) {
  const ModelParams& params = problem.params;
  check_inputs(params, problem.l);
  if (problem.grid.points < 100) throw std::invalid_argument("effective_1d_problem: need at least 100 points");
  DiscreteRadialProblem out;
  out.q_max = problem.grid.q_max > 0.0 ? problem.grid.q_max
                                       : auto_q_max(params, problem.l, levels);
  const auto m = static_cast<std::size_t>(problem.grid.points);
  const double h = out.q_max / static_cast<double>(m + 1);
  const double h2 = params.hbar * params.hbar;
  out.step = h;
  out.nodes.resize(m);
  out.radii.resize(m);
  out.matrix.diag.resize(m);
  out.matrix.off.assign(m - 1, -h2 / (2.0 * h * h));
  double v_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const double q = h * static_cast<double>(i + 1);
    const double r = inverse_flattening(params, q);
    const double v = quantum_effective_potential(params, problem.l, r);
    out.nodes[i] = q;
    out.radii[i] = r;
    out.matrix.diag[i] = h2 / (h * h) + v;
    v_min = std::min(v_min, v);
  }

  if (params.dim == 2 && problem.l == 0)
    out.warnings.emplace_back(
        "N = 2, l = 0: the Q-line potential is attractive like -1/(4 Q^2) at the origin; the "
        "Dirichlet end selects the regular solution");

  const auto threshold = continuum_threshold(params);
  const double e_ref =
      threshold ? *threshold
                : closed_form_energy(params, 2 * (levels - 1) + problem.l);
  const double floor = std::max(v_min, 0.0);
  if (e_ref > floor) {
    const double wavelength = 2.0 * std::numbers::pi * params.hbar / std::sqrt(2.0 * (e_ref - floor));
    if (wavelength / h < 20.0)
      out.warnings.emplace_back("grid resolves fewer than 20 points per de Broglie wavelength");
  }
  return out;
}

DiscreteRadialProblem radial_operator_problem(const ModelParams& params, int l, RadialFlavor flavor,
                                              double r_max, int cells) {
  check_inputs(params, l);
  if (cells < 3 || !(r_max > 0.0)) throw std::invalid_argument("radial_operator_problem: bad grid");
  const double n = params.dim;
  const double lam = params.lambda;
  const double h2 = params.hbar * params.hbar;
  const double w2 = params.omega * params.omega;
  const double h = r_max / cells;

  auto weight = [&](double r) {
    const double d = 1.0 + lam * r * r;
    const double base = std::pow(r, n - 1.0);
    switch (flavor) {
      case RadialFlavor::schrodinger: return base * d;
      case RadialFlavor::tlb: return base * std::pow(d, n / 2.0);
      case RadialFlavor::tpdm: return base;
    }
    return base;
  };
  auto stiffness = [&](double r) {
    const double d = 1.0 + lam * r * r;
    const double base = std::pow(r, n - 1.0);
    switch (flavor) {
      case RadialFlavor::schrodinger: return base;
      case RadialFlavor::tlb: return base * std::pow(d, n / 2.0 - 1.0);
      case RadialFlavor::tpdm: return base / d;
    }
    return base;
  };
  auto potential = [&](double r) {
    const double r2 = r * r;
    const double d = 1.0 + lam * r2;
    double v = h2 * l * (l + n - 2.0) / (2.0 * r2 * d) + w2 * r2 / (2.0 * d);
    if (flavor == RadialFlavor::tlb)
      v += -h2 * lam * (n - 2.0) * (2.0 * n + 3.0 * lam * r2 * (n - 2.0)) / (8.0 * d * d * d);
    if (flavor == RadialFlavor::tpdm) v += h2 * lam * (n + lam * r2 * (n - 3.0)) / (2.0 * d * d * d);
    return v;
  };

  const auto m = static_cast<std::size_t>(cells);
  DiscreteRadialProblem out;
  out.step = h;
  out.q_max = r_max;
  out.nodes.resize(m);
  out.radii.resize(m);
  out.matrix.diag.resize(m);
  out.matrix.off.resize(m - 1);
  std::vector<double> w(m);
  std::vector<double> faces(m + 1);
  for (std::size_t i = 0; i <= m; ++i) faces[i] = i == 0 ? 0.0 : stiffness(h * static_cast<double>(i));
  const double scale = h2 / (2.0 * h * h);
  for (std::size_t i = 0; i < m; ++i) {
    const double r = h * (static_cast<double>(i) + 0.5);
    out.nodes[i] = r;
    out.radii[i] = r;
    w[i] = weight(r);
    out.matrix.diag[i] = scale * (faces[i] + faces[i + 1]) / w[i] + potential(r);
  }
  for (std::size_t i = 0; i + 1 < m; ++i) out.matrix.off[i] = -scale * faces[i + 1] / std::sqrt(w[i] * w[i + 1]);
  return out;
}

double SpectrumReport::max_rel_residual() const {
  double worst = 0.0;
  for (const auto& level : levels) worst = std::max(worst, level.rel_residual);
  return worst;
}

double SpectrumReport::min_measured_order() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& level : levels)
    if (!std::isnan(level.measured_order)) best = std::min(best, level.measured_order);
  return best;
}

SpectrumReport solve_bound_states(const RadialProblem& problem, int levels, const SolveOptions& options) {
  if (levels < 1) throw std::invalid_argument("solve_bound_states: levels must be >= 1");
  if (options.refinements < 0) throw std::invalid_argument("solve_bound_states: refinements must be >= 0");
  SpectrumReport report;
  report.params = problem.params;
  report.l = problem.l;
  report.flavor = problem.flavor;
  report.threshold = continuum_threshold(problem.params);
  report.refinements = options.refinements;
  report.extrapolated = options.extrapolate && options.refinements >= 1;

  RadialProblem grid_problem = problem;
  std::vector<std::vector<double>> values;
  for (int s = 0; s <= options.refinements; ++s) {
    grid_problem.grid.points = (problem.grid.points + 1) * (1 << s) - 1;
    DiscreteRadialProblem discrete = effective_1d_problem(grid_problem, levels);
    if (s == 0) {
      grid_problem.grid.q_max = discrete.q_max;
      report.q_max = discrete.q_max;
      report.points = problem.grid.points;
      report.warnings = discrete.warnings;
      report.count_below_threshold = report.threshold ? count_below(discrete.matrix, *report.threshold)
                                                      : discrete.matrix.size();
    }
    values.push_back(lowest_eigenvalues(discrete.matrix, static_cast<std::size_t>(levels)));
  }

  const double trusted_limit = report.threshold
                                   ? *report.threshold * (1.0 - options.threshold_margin)
                                   : std::numeric_limits<double>::infinity();
  for (int k = 0; k < levels; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    LevelRecord rec;
    rec.n_r = k;
    rec.n = 2 * k + problem.l;
    for (const auto& grid : values) rec.grid_values.push_back(grid[ks]);
    const std::size_t last = values.size() - 1;
    rec.e_numeric = report.extrapolated ? richardson(values[last - 1][ks], values[last][ks])
                                        : values[last][ks];
    if (!(rec.e_numeric < trusted_limit)) {
      report.truncated = true;
      break;
    }
    rec.e_closed = closed_form_energy(problem.params, rec.n);
    rec.abs_residual = std::abs(rec.e_numeric - rec.e_closed);
    rec.rel_residual = rel_diff(rec.e_numeric, rec.e_closed);
    rec.measured_order = values.size() >= 3
                             ? measured_order(values[last - 2][ks], values[last - 1][ks], values[last][ks])
                             : std::numeric_limits<double>::quiet_NaN();
    report.levels.push_back(std::move(rec));
  }
  if (report.truncated)
    report.warnings.emplace_back("requested levels exceed the trusted region below the threshold");
  return report;
}

bool IsospectralityReport::agree() const noexcept {
  return max_pairwise_rel <= tolerance && (!n2_operators_identical || *n2_operators_identical);
}

IsospectralityReport isospectrality_check(const ModelParams& params, int l, int levels, int cells,
                                          double tolerance) {
  check_inputs(params, l);
  if (levels < 1) throw std::invalid_argument("isospectrality_check: levels must be >= 1");
  IsospectralityReport report;
  report.params = params;
  report.l = l;
  report.tolerance = tolerance;
  const double r_max = inverse_flattening(params, auto_q_max(params, l, levels));
  const auto k = static_cast<std::size_t>(levels);

  auto solve = [&](RadialFlavor flavor) {
    std::array<std::vector<double>, 2> fine;
    for (int s = 0; s < 2; ++s) {
      const auto discrete = radial_operator_problem(params, l, flavor, r_max, cells * (2 << s));
      fine[static_cast<std::size_t>(s)] = lowest_eigenvalues(discrete.matrix, k);
    }
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = richardson(fine[0][i], fine[1][i]);
    return out;
  };
  report.schrodinger = solve(RadialFlavor::schrodinger);
  report.tlb = solve(RadialFlavor::tlb);
  report.tpdm = solve(RadialFlavor::tpdm);
  for (std::size_t i = 0; i < k; ++i) {
    const double closed = closed_form_energy(params, 2 * static_cast<int>(i) + l);
    report.closed.push_back(closed);
    const std::array<double, 3> e{report.schrodinger[i], report.tlb[i], report.tpdm[i]};
    for (std::size_t a = 0; a < 3; ++a) {
      report.max_closed_rel = std::max(report.max_closed_rel, rel_diff(e[a], closed));
      for (std::size_t b = a + 1; b < 3; ++b)
        report.max_pairwise_rel = std::max(report.max_pairwise_rel, rel_diff(e[a], e[b]));
    }
  }
  if (params.dim == 2)
    report.n2_operators_identical = algebra::build_hamiltonian(algebra::Flavor::tlb, 2) ==
                                    algebra::build_hamiltonian(algebra::Flavor::schrodinger, 2);
  return report;
}

ThresholdReport threshold_accumulation(const ModelParams& params, int l, double q_max0, int points0,
                                       int doublings) {
  check_inputs(params, l);
  const auto threshold = continuum_threshold(params);
  if (!threshold) throw std::invalid_argument("threshold_accumulation: flat model has no threshold");
  if (points0 < 100 || doublings < 1 || !(q_max0 > 0.0))
    throw std::invalid_argument("threshold_accumulation: bad grid");
  ThresholdReport report;
  report.params = params;
  report.l = l;
  report.threshold = *threshold;

  std::vector<std::vector<double>> below;
  // One extra doubling serves only as the reference for the last stage.
  for (int s = 0; s <= doublings + 1; ++s) {
    RadialProblem problem{params, l, RadialFlavor::tlb, {q_max0 * (1 << s), (points0 + 1) * (1 << s) - 1}};
    const auto discrete = effective_1d_problem(problem);
    ThresholdStage stage;
    stage.q_max = problem.grid.q_max;
    stage.points = problem.grid.points;
    stage.count_below = count_below(discrete.matrix, *threshold);
    below.push_back(lowest_eigenvalues(discrete.matrix, stage.count_below));
    stage.top = below.back().empty() ? std::numeric_limits<double>::quiet_NaN() : below.back().back();
    report.stages.push_back(stage);
  }

  auto matches = [](double e, const std::vector<double>& others) {
    const auto it = std::lower_bound(others.begin(), others.end(), e);
    const bool hi = it != others.end() && rel_diff(*it, e) <= 1e-6;
    const bool lo = it != others.begin() && rel_diff(*std::prev(it), e) <= 1e-6;
    return hi || lo;
  };
  std::vector<double> last_resolved;
  report.stages.pop_back();
  for (std::size_t s = 0; s < report.stages.size(); ++s) {
    std::vector<double> resolved;
    for (double e : below[s])
      if (matches(e, below[s + 1])) resolved.push_back(e);
    report.stages[s].resolved = resolved.size();
    report.stages[s].top_resolved =
        resolved.empty() ? std::numeric_limits<double>::quiet_NaN() : resolved.back();
    last_resolved = std::move(resolved);
  }

  const auto& st = report.stages;
  report.counts_increase = st.back().count_below > st.front().count_below &&
                           st.back().resolved > st.front().resolved;
  report.top_approaches_threshold = true;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (i > 0 && (st[i].count_below < st[i - 1].count_below || st[i].resolved < st[i - 1].resolved))
      report.counts_increase = false;
    if (!(st[i].top_resolved < *threshold)) report.top_approaches_threshold = false;
    if (i > 0 && !(st[i].top_resolved >= st[i - 1].top_resolved)) report.top_approaches_threshold = false;
  }
  report.gaps_decrease = last_resolved.size() >= 3;
  for (std::size_t i = 2; i < last_resolved.size(); ++i)
    if (!(last_resolved[i] - last_resolved[i - 1] < last_resolved[i - 1] - last_resolved[i - 2]))
      report.gaps_decrease = false;
  return report;
}

double convert_radial_flavor(const ModelParams& params, double r, double phi_tlb, RadialFlavor target) {
  const double d = conformal_factor(params, r);
  const double n = params.dim;
  switch (target) {
    case RadialFlavor::schrodinger: return std::pow(d, (n - 2.0) / 4.0) * phi_tlb;
    case RadialFlavor::tlb: return phi_tlb;
    case RadialFlavor::tpdm: return std::pow(d, n / 4.0) * phi_tlb;
  }
  return phi_tlb;
}

std::vector<WavefunctionSample> radial_wavefunction(const RadialProblem& problem, int n_r) {
  if (n_r < 0) throw std::invalid_argument("radial_wavefunction: n_r must be >= 0");
  const auto discrete = effective_1d_problem(problem, n_r + 1);
  const double e = eigenvalue_at(discrete.matrix, static_cast<std::size_t>(n_r));
  const auto u = eigenvector(discrete.matrix, e);
  const ModelParams& params = problem.params;
  const double n = params.dim;
  std::vector<WavefunctionSample> out(u.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = discrete.radii[i];
    const double d = conformal_factor(params, r);
    const double phi_tlb = std::pow(r, (1.0 - n) / 2.0) * std::pow(d, -(n - 1.0) / 4.0) * u[i];
    out[i] = {r, convert_radial_flavor(params, r, phi_tlb, problem.flavor)};
    peak = std::max(peak, std::abs(out[i].value));
  }
  if (peak > 0.0)
    for (auto& s : out) s.value /= peak;
  return out;
}

}  // namespace darboux::spectra
