#include "darboux/hyperspherical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace darboux::classical {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

/// prod_(k=from..to) sin(theta_k), 1-based indices, empty product is 1.
double sin_product(const std::vector<double>& theta, int from, int to) {
  double s = 1.0;
  for (int k = from; k <= to; ++k) s *= std::sin(theta[u(k - 1)]);
  return s;
}

/// Jacobian dq_i / dtheta_j (both 1-based) of the coordinate map at r.
double coordinate_derivative(const std::vector<double>& theta, double r, int n, int i, int j) {
  const bool last = i == n;
  const int upto = last ? n - 1 : i - 1;
  if (!last && j > i) return 0.0;
  if (last && j > n - 1) return 0.0;
  double value = r;
  if (!last) value *= j == i ? -std::sin(theta[u(i - 1)]) : std::cos(theta[u(i - 1)]);
  for (int k = 1; k <= upto; ++k) value *= k == j ? std::cos(theta[u(k - 1)]) : std::sin(theta[u(k - 1)]);
  return value;
}

}  // namespace

HypersphericalState to_hyperspherical(const PhaseState& state) {
  const int n = state.dim();
  if (n < 2) throw std::invalid_argument("to_hyperspherical: dimension must be at least 2");
  HypersphericalState h;
  double r2 = 0.0;
  for (double x : state.q) r2 += x * x;
  h.r = std::sqrt(r2);
  if (!(h.r > 0.0)) throw std::domain_error("to_hyperspherical: state at the origin");

  h.theta.resize(u(n - 1));
  double tail2 = r2;  // |q_(k..N)|^2
  for (int k = 1; k <= n - 2; ++k) {
    const double qk = state.q[u(k - 1)];
    tail2 -= qk * qk;
    const double rest = std::sqrt(std::max(tail2, 0.0));
    if (!(rest > 1e-14 * h.r)) throw std::domain_error("to_hyperspherical: state on a chart axis");
    h.theta[u(k - 1)] = std::atan2(rest, qk);
  }
  double last = std::atan2(state.q[u(n - 1)], state.q[u(n - 2)]);
  if (last < 0.0) last += 2.0 * std::numbers::pi;
  h.theta[u(n - 2)] = last;

  double qp = 0.0;
  for (int i = 0; i < n; ++i) qp += state.q[u(i)] * state.p[u(i)];
  h.p_r = qp / h.r;
  h.p_theta.assign(u(n - 1), 0.0);
  for (int j = 1; j <= n - 1; ++j)
    for (int i = 1; i <= n; ++i)
      h.p_theta[u(j - 1)] += state.p[u(i - 1)] * coordinate_derivative(h.theta, h.r, n, i, j);
  return h;
}

PhaseState from_hyperspherical(const HypersphericalState& h) {
  const int n = static_cast<int>(h.theta.size()) + 1;
  if (h.p_theta.size() != h.theta.size())
    throw std::invalid_argument("from_hyperspherical: inconsistent angle and momentum counts");
  const auto& th = h.theta;
  PhaseState s;
  s.q.resize(u(n));
  s.p.resize(u(n));
  for (int j = 1; j < n; ++j) s.q[u(j - 1)] = h.r * std::cos(th[u(j - 1)]) * sin_product(th, 1, j - 1);
  s.q[u(n - 1)] = h.r * sin_product(th, 1, n - 1);

  // Momenta from the explicit inverse relations.
  auto angular_sum = [&](int upper) {
    double sum = 0.0;
    for (int l = 1; l <= upper; ++l)
      sum += sin_product(th, l + 1, upper) / sin_product(th, 1, l - 1) * std::cos(th[u(l - 1)]) *
             h.p_theta[u(l - 1)];
    return sum;
  };
  for (int j = 1; j < n; ++j) {
    const double cj = std::cos(th[u(j - 1)]);
    const double sj = std::sin(th[u(j - 1)]);
    const double prefix = sin_product(th, 1, j - 1);
    s.p[u(j - 1)] = prefix * cj * h.p_r + cj / h.r * angular_sum(j - 1) -
                    sj / (h.r * prefix) * h.p_theta[u(j - 1)];
  }
  s.p[u(n - 1)] = sin_product(th, 1, n - 1) * h.p_r + angular_sum(n - 1) / h.r;
  return s;
}

double angular_momentum_squared(const HypersphericalState& h) {
  double sum = 0.0;
  for (std::size_t j = 0; j < h.p_theta.size(); ++j) {
    const double s = sin_product(h.theta, 1, static_cast<int>(j));
    sum += h.p_theta[j] * h.p_theta[j] / (s * s);
  }
  return sum;
}

double lower_casimir(const HypersphericalState& h, int m) {
  const int n = static_cast<int>(h.theta.size()) + 1;
  if (m < 2 || m > n) throw std::out_of_range("lower_casimir: m outside 2..N");
  double sum = 0.0;
  for (int j = n - m + 1; j <= n - 1; ++j) {
    const double s = sin_product(h.theta, n - m + 1, j - 1);
    sum += h.p_theta[u(j - 1)] * h.p_theta[u(j - 1)] / (s * s);
  }
  return sum;
}

bool RadialReduction::consistent(double tolerance) const noexcept {
  const double scale = std::max(1.0, std::abs(cartesian));
  return std::abs(cartesian - hyperspherical) <= tolerance * scale &&
         std::abs(cartesian - flattened) <= tolerance * scale;
}

RadialReduction radial_reduction_check(const ModelParams& params, const PhaseState& state) {
  const HypersphericalState h = to_hyperspherical(state);
  const double l2 = angular_momentum_squared(h);
  const double d = conformal_factor(params, h.r);
  const double w2 = params.omega * params.omega;
  RadialReduction out;
  out.cartesian = hamiltonian(params, state);
  out.hyperspherical = (h.p_r * h.p_r + l2 / (h.r * h.r) + w2 * h.r * h.r) / (2.0 * d);
  out.flat_q = flattening_coordinate(params, h.r);
  out.flat_p = h.p_r / std::sqrt(d);
  out.flattened = 0.5 * out.flat_p * out.flat_p + classical_effective_potential(params, l2, h.r);
  return out;
}

}  // namespace darboux::classical
