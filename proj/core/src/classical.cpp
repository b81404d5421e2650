#include "darboux/classical.hpp"

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace darboux::classical {

namespace odeint = boost::numeric::odeint;
using StateVector = std::vector<double>;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

StateVector pack(const PhaseState& s) {
  StateVector x(s.q);
  x.insert(x.end(), s.p.begin(), s.p.end());
  return x;
}

PhaseState unpack(const StateVector& x, double t) {
  const auto n = static_cast<std::ptrdiff_t>(x.size() / 2);
  return {StateVector(x.begin(), x.begin() + n), StateVector(x.begin() + n, x.end()), t};
}

void check_state(const ModelParams& params, const PhaseState& s) {
  if (s.q.size() != s.p.size() || s.dim() != params.dim)
    throw std::invalid_argument("PhaseState: dimension does not match the model");
}

struct System {
  ModelParams params;
  void operator()(const StateVector& x, StateVector& dxdt, double /*t*/) const {
    const std::size_t n = x.size() / 2;
    double q2 = 0.0;
    double p2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      q2 += x[i] * x[i];
      p2 += x[n + i] * x[n + i];
    }
    const double w2 = params.omega * params.omega;
    const double d = 1.0 + params.lambda * q2;
    const double radial = params.lambda * (p2 + w2 * q2) / (d * d) - w2 / d;
    for (std::size_t i = 0; i < n; ++i) {
      dxdt[i] = x[n + i] / d;
      dxdt[n + i] = radial * x[i];
    }
  }
};

using DenseStepper = odeint::dense_output_runge_kutta<
    odeint::controlled_runge_kutta<odeint::runge_kutta_dopri5<StateVector>>>;

double distance(const PhaseState& a, const PhaseState& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.q.size(); ++i) {
    s += (a.q[i] - b.q[i]) * (a.q[i] - b.q[i]);
    s += (a.p[i] - b.p[i]) * (a.p[i] - b.p[i]);
  }
  return std::sqrt(s);
}

}  // namespace

double hamiltonian(const ModelParams& params, const PhaseState& s) {
  check_state(params, s);
  const double q2 = dot(s.q, s.q);
  return (dot(s.p, s.p) + params.omega * params.omega * q2) / (2.0 * (1.0 + params.lambda * q2));
}

Flow equations_of_motion(const ModelParams& params, const PhaseState& state) {
  check_state(params, state);
  StateVector x = pack(state);
  StateVector dx(x.size());
  System{params}(x, dx, state.t);
  const PhaseState rate = unpack(dx, 0.0);
  return {rate.q, rate.p};
}

Invariants classical_invariants(const ModelParams& params, const PhaseState& s) {
  check_state(params, s);
  const int n = s.dim();
  const auto u = [](int i) { return static_cast<std::size_t>(i); };
  Invariants out;
  out.hamiltonian = hamiltonian(params, s);
  auto l2 = [&](int i, int j) {
    const double l = s.q[u(i)] * s.p[u(j)] - s.q[u(j)] * s.p[u(i)];
    return l * l;
  };
  for (int m = 2; m <= n; ++m) {
    double upper = 0.0;
    double lower = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) upper += l2(i, j);
    for (int i = n - m; i < n; ++i)
      for (int j = i + 1; j < n; ++j) lower += l2(i, j);
    out.upper.push_back(upper);
    out.lower.push_back(lower);
  }
  const double shift = 2.0 * params.lambda * out.hamiltonian - params.omega * params.omega;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.fradkin.push_back(s.p[u(i)] * s.p[u(j)] - shift * s.q[u(i)] * s.q[u(j)]);
  return out;
}

std::vector<double> invariant_vector(const ModelParams& params, const PhaseState& state) {
  const Invariants inv = classical_invariants(params, state);
  std::vector<double> out{inv.hamiltonian};
  out.insert(out.end(), inv.upper.begin(), inv.upper.end());
  out.insert(out.end(), inv.lower.begin(), inv.lower.end() - 1);
  out.insert(out.end(), inv.fradkin.begin(), inv.fradkin.end());
  return out;
}

std::vector<std::string> invariant_names(int dim) {
  std::vector<std::string> names{"H"};
  for (int m = 2; m <= dim; ++m) names.push_back("C^(" + std::to_string(m) + ")");
  for (int m = 2; m < dim; ++m) names.push_back("C_(" + std::to_string(m) + ")");
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) names.push_back("I_" + std::to_string(i) + std::to_string(j));
  return names;
}

double TrajectoryRecord::max_drift() const {
  return drift.empty() ? 0.0 : *std::max_element(drift.begin(), drift.end());
}

TrajectoryRecord integrate(const ModelParams& params, const PhaseState& initial, double t_end,
                           const IntegrationOptions& options) {
  params.validate();
  check_state(params, initial);
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
  if (!(t_end > initial.t)) throw std::invalid_argument("integrate: t_end must exceed the start time");

  TrajectoryRecord rec;
  rec.invariant_names = invariant_names(params.dim);
  const std::vector<double> reference = invariant_vector(params, initial);
  rec.drift.assign(reference.size(), 0.0);
  rec.samples.push_back(initial);

  auto update_drift = [&](const PhaseState& s) {
    const std::vector<double> now = invariant_vector(params, s);
    for (std::size_t k = 0; k < now.size(); ++k)
      rec.drift[k] = std::max(rec.drift[k],
                              std::abs(now[k] - reference[k]) / std::max(1.0, std::abs(reference[k])));
  };

  const System sys{params};
  DenseStepper stepper = odeint::make_dense_output(options.tolerance, options.tolerance,
                                                   odeint::runge_kutta_dopri5<StateVector>());
  stepper.initialize(pack(initial), initial.t, std::min(1e-3, (t_end - initial.t) / 10.0));
  double next_sample = initial.t + options.sample_interval;
  StateVector buffer(2 * static_cast<std::size_t>(params.dim));

  while (stepper.current_time() < t_end) {
    const auto [t0, t1] = stepper.do_step(sys);
    ++rec.steps;
    if (t1 - t0 < options.min_step * (1.0 + std::abs(t1)))
      throw IntegrationError("integrate: step size underflow at t = " + std::to_string(t1));
    for (double x : stepper.current_state())
      if (!std::isfinite(x)) throw IntegrationError("integrate: non-finite state at t = " + std::to_string(t1));

    if (options.sample_interval > 0.0) {
      while (next_sample <= t1 && next_sample <= t_end) {
        stepper.calc_state(next_sample, buffer);
        rec.samples.push_back(unpack(buffer, next_sample));
        next_sample += options.sample_interval;
      }
    }
    if (t1 <= t_end) {
      const PhaseState s = unpack(stepper.current_state(), t1);
      update_drift(s);
      if (options.sample_interval <= 0.0) rec.samples.push_back(s);
    } else {
      stepper.calc_state(t_end, buffer);
      const PhaseState s = unpack(buffer, t_end);
      update_drift(s);
      if (options.sample_interval <= 0.0) rec.samples.push_back(s);
    }
  }
  return rec;
}

struct DenseTrajectory::Impl {
  ModelParams params;
  double tolerance;
  std::vector<PhaseState> checkpoints;
};

DenseTrajectory::DenseTrajectory(const ModelParams& params, const PhaseState& initial,
                                 double t_end, double tolerance)
    : t_end_(t_end) {
  IntegrationOptions opts;
  opts.tolerance = tolerance;
  TrajectoryRecord rec = integrate(params, initial, t_end, opts);
  impl_ = std::make_shared<const Impl>(Impl{params, tolerance, std::move(rec.samples)});
}

PhaseState DenseTrajectory::at(double t) const {
  const auto& cps = impl_->checkpoints;
  auto it = std::upper_bound(cps.begin(), cps.end(), t,
                             [](double value, const PhaseState& s) { return value < s.t; });
  if (it != cps.begin()) --it;
  if (it->t == t) return *it;
  StateVector x = pack(*it);
  odeint::integrate_adaptive(
      odeint::make_controlled(impl_->tolerance, impl_->tolerance,
                              odeint::runge_kutta_dopri5<StateVector>()),
      System{impl_->params}, x, it->t, t, (t - it->t) / 4.0);
  return unpack(x, t);
}

double period_estimate(const ModelParams& params, const PhaseState& state) {
  const double e = hamiltonian(params, state);
  const double w2 = params.omega * params.omega - 2.0 * params.lambda * e;
  if (!(w2 > 0.0)) throw std::domain_error("period_estimate: orbit is not bounded");
  const double big_omega = std::sqrt(w2);
  const double spread = dot(state.q, state.q) + dot(state.p, state.p) / w2;
  return 2.0 * std::numbers::pi / big_omega * (1.0 + params.lambda * spread / 2.0);
}

ClosureResult orbit_closure(const ModelParams& params, const PhaseState& initial, double horizon,
                            const ClosureOptions& options) {
  ClosureResult out;
  double scale = 0.0;
  bool bounded = true;
  try {
    out.period_estimate = period_estimate(params, initial);
    scale = out.period_estimate;
  } catch (const std::domain_error&) {
    bounded = false;
    scale = params.omega > 0.0 ? 2.0 * std::numbers::pi / params.omega : 1.0;
  }
  if (horizon <= 0.0) horizon = 1.5 * scale;

  const DenseTrajectory traj(params, initial, initial.t + horizon, options.tolerance);
  auto dist = [&](double t) { return distance(traj.at(initial.t + t), initial); };

  // Coarse scan past the initial departure, then golden-section refinement.
  const double dt = scale * options.scan_fraction;
  const double start = bounded ? 0.5 * scale : dt;
  double best_t = -1.0;
  double best_d = INFINITY;
  for (double t = start; t <= horizon; t += dt) {
    const double d = dist(t);
    if (d < best_d) {
      best_d = d;
      best_t = t;
    }
  }
  if (best_t < 0.0) return out;

  double a = std::max(start, best_t - dt);
  double b = std::min(horizon, best_t + dt);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = dist(c);
  double fd = dist(d);
  while (b - a > 1e-13 * (1.0 + b)) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = dist(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = dist(d);
    }
  }
  const double t_star = 0.5 * (a + b);
  const double d_star = dist(t_star);
  out.period = d_star < best_d ? t_star : best_t;
  out.distance = std::min(d_star, best_d);
  out.conclusive = out.distance < options.threshold;
  return out;
}

double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhaseState& state,
                       double h) {
  const std::size_t n = state.q.size();
  auto partial = [&](const PhaseFunction& fn, bool momentum, std::size_t i) {
    PhaseState plus = state;
    PhaseState minus = state;
    double& xp = momentum ? plus.p[i] : plus.q[i];
    double& xm = momentum ? minus.p[i] : minus.q[i];
    const double step = h * (1.0 + std::abs(xp));
    xp += step;
    xm -= step;
    return (fn(plus) - fn(minus)) / (2.0 * step);
  };
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += partial(f, false, i) * partial(g, true, i) - partial(f, true, i) * partial(g, false, i);
  return sum;
}

int jacobian_rank(const std::vector<PhaseFunction>& functions, const PhaseState& state,
                  double rel_threshold, double h) {
  const std::size_t n = state.q.size();
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(functions.size()), static_cast<Eigen::Index>(2 * n));
  for (std::size_t k = 0; k < 2 * n; ++k) {
    PhaseState plus = state;
    PhaseState minus = state;
    double& xp = k < n ? plus.q[k] : plus.p[k - n];
    double& xm = k < n ? minus.q[k] : minus.p[k - n];
    const double step = h * (1.0 + std::abs(xp));
    xp += step;
    xm -= step;
    for (std::size_t r = 0; r < functions.size(); ++r)
      jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
          (functions[r](plus) - functions[r](minus)) / (2.0 * step);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_threshold * sv(0)) ++rank;
  return rank;
}

std::vector<PhaseFunction> superintegrable_set(const ModelParams& params, int fixed_i) {
  const int n = params.dim;
  if (fixed_i < 0 || fixed_i >= n) throw std::out_of_range("superintegrable_set: index");
  std::vector<PhaseFunction> fs{[params](const PhaseState& s) { return hamiltonian(params, s); }};
  for (int m = 2; m <= n; ++m)
    fs.emplace_back([params, m](const PhaseState& s) {
      return classical_invariants(params, s).upper[static_cast<std::size_t>(m - 2)];
    });
  for (int m = 2; m < n; ++m)
    fs.emplace_back([params, m](const PhaseState& s) {
      return classical_invariants(params, s).lower[static_cast<std::size_t>(m - 2)];
    });
  fs.emplace_back([params, fixed_i, n](const PhaseState& s) {
    return classical_invariants(params, s).fradkin[static_cast<std::size_t>(fixed_i * n + fixed_i)];
  });
  return fs;
}

std::vector<PhaseFunction> involutive_set(const ModelParams& params) {
  std::vector<PhaseFunction> fs{[params](const PhaseState& s) { return hamiltonian(params, s); }};
  for (int m = 2; m <= params.dim; ++m)
    fs.emplace_back([params, m](const PhaseState& s) {
      return classical_invariants(params, s).lower[static_cast<std::size_t>(m - 2)];
    });
  return fs;
}

int independence_rank(const ModelParams& params, const PhaseState& state, int fixed_i) {
  return jacobian_rank(superintegrable_set(params, fixed_i), state);
}

PhaseState random_state(int dim, std::mt19937_64& rng) {
  if (dim < 2) throw std::invalid_argument("random_state: dimension must be at least 2");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  auto ball_point = [&] {
    std::vector<double> v(static_cast<std::size_t>(dim));
    double norm = 0.0;
    for (double& x : v) {
      x = normal(rng);
      norm += x * x;
    }
    const double radius = std::pow(uniform(rng), 1.0 / dim) / std::sqrt(norm);
    for (double& x : v) x *= radius;
    return v;
  };
  for (;;) {
    PhaseState s{ball_point(), ball_point(), 0.0};
    bool generic = true;
    double tail = 0.0;
    for (int k = dim - 1; k >= 1 && generic; --k) {
      const double qk = s.q[static_cast<std::size_t>(k)];
      const double prev = s.q[static_cast<std::size_t>(k - 1)];
      tail += qk * qk;
      // sin(theta_k) = |q_(k+1..N)| / |q_(k..N)|
      generic = std::sqrt(tail / (tail + prev * prev)) >= 1e-3;
    }
    if (generic) return s;
  }
}

}  // namespace darboux::classical

namespace darboux::classical {

double SuiteReport::max_drift() const {
  double m = 0.0;
  for (const auto& s : states) m = std::max(m, s.max_drift);
  return m;
}

double SuiteReport::max_bracket() const {
  double m = 0.0;
  for (const auto& s : states) m = std::max(m, s.max_bracket);
  return m;
}

int SuiteReport::min_rank() const {
  int m = states.empty() ? 0 : states.front().rank;
  for (const auto& s : states) m = std::min(m, s.rank);
  return m;
}

double SuiteReport::max_closure_distance() const {
  double m = 0.0;
  for (const auto& s : states)
    if (s.closure.conclusive) m = std::max(m, s.closure.distance);
  return m;
}

std::size_t SuiteReport::inconclusive_closures() const {
  std::size_t n = 0;
  for (const auto& s : states)
    if (!s.closure.conclusive) ++n;
  return n;
}

bool SuiteReport::invariants_ok() const {
  return !states.empty() && max_drift() < options.drift_limit && max_bracket() < options.bracket_limit &&
         min_rank() == 2 * params.dim - 1;
}

bool SuiteReport::closures_ok() const {
  return !states.empty() && inconclusive_closures() == 0;
}

SuiteReport run_suite(const ModelParams& params, const SuiteOptions& options) {
  params.validate();
  SuiteReport report{params, options, {}};
  std::mt19937_64 rng(options.seed);
  const PhaseFunction h = [&params](const PhaseState& s) { return hamiltonian(params, s); };
  const auto names = invariant_names(params.dim);
  for (int k = 0; k < options.states; ++k) {
    StateCheck check;
    check.initial = random_state(params.dim, rng);
    check.energy = hamiltonian(params, check.initial);
    IntegrationOptions integration;
    integration.tolerance = options.tolerance;
    integration.sample_interval = options.t_end;
    check.max_drift = integrate(params, check.initial, options.t_end, integration).max_drift();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const PhaseFunction f = [&params, i](const PhaseState& s) { return invariant_vector(params, s)[i]; };
      check.max_bracket = std::max(check.max_bracket, std::abs(poisson_bracket(h, f, check.initial)));
    }
    check.rank = independence_rank(params, check.initial, 0);
    check.closure = orbit_closure(params, check.initial);
    report.states.push_back(std::move(check));
  }
  return report;
}

}  // namespace darboux::classical
