#include "darboux/model.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace darboux {

void ModelParams::validate() const {
  if (dim < 2) throw std::invalid_argument("dimension N must be >= 2");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("lambda must be finite and >= 0");
  if (!(omega >= 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("omega must be finite and >= 0");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be > 0");
}

double conformal_factor(const ModelParams& params, double r) noexcept {
  return 1.0 + params.lambda * r * r;
}

double scalar_curvature(const ModelParams& params, double r) {
  if (params.is_flat()) return 0.0;
  const double n = params.dim;
  const double lr2 = params.lambda * r * r;
  const double d = 1.0 + lr2;
  return -params.lambda * (n - 1.0) * (2.0 * n + 3.0 * (n - 2.0) * lr2) / (d * d * d);
}

double oscillator_potential(const ModelParams& params, double r) {
  const double w2 = params.omega * params.omega;
  return w2 * r * r / (2.0 * conformal_factor(params, r));
}

double flattening_coordinate(const ModelParams& params, double r) {
  if (r < 0.0) throw std::domain_error("flattening_coordinate: r must be >= 0");
  if (params.is_flat()) return r;
  const double s = std::sqrt(params.lambda);
  return 0.5 * r * std::sqrt(1.0 + params.lambda * r * r) + std::asinh(s * r) / (2.0 * s);
}

double inverse_flattening(const ModelParams& params, double q_value) {
  if (q_value < 0.0) throw std::domain_error("inverse_flattening: Q must be >= 0");
  if (params.is_flat() || q_value == 0.0) return q_value;

  // Q(r) >= r, so r* lies in [0, Q*]; the bracket only grows if rounding
  // makes Q(hi) fall short.
  double lo = 0.0;
  double hi = 2.0 * q_value + 1.0;
  while (flattening_coordinate(params, hi) < q_value) {
    lo = hi;
    hi *= 2.0;
  }

  const double tol = 1e-12 * (1.0 + q_value);
  // Start from the large-r asymptote Q ~ sqrt(lambda) r^2 / 2 or the small-r
  // form Q ~ r, whichever is smaller.
  double r = std::min(q_value, std::sqrt(2.0 * q_value / std::sqrt(params.lambda)));
  r = std::clamp(r, lo, hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = flattening_coordinate(params, r) - q_value;
    if (std::abs(f) <= tol) return r;
    if (f > 0.0)
      hi = r;
    else
      lo = r;
    const double slope = std::sqrt(1.0 + params.lambda * r * r);
    double next = r - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == r) return r;
    r = next;
  }
  return r;
}

double classical_effective_potential(const ModelParams& params, double c_n, double r) {
  if (c_n < 0.0) throw std::domain_error("classical_effective_potential: c_N must be >= 0");
  if (r < 0.0) throw std::domain_error("classical_effective_potential: r must be >= 0");
  const double d = conformal_factor(params, r);
  if (c_n == 0.0) return oscillator_potential(params, r);
  if (r == 0.0) throw std::domain_error("classical_effective_potential: pole at r = 0");
  return c_n / (2.0 * d * r * r) + oscillator_potential(params, r);
}

EffectiveMinimum classical_effective_minimum(const ModelParams& params, double c_n) {
  if (!(c_n > 0.0)) throw std::domain_error("classical_effective_minimum: requires c_N > 0");
  if (!(params.omega > 0.0))
    throw std::domain_error("classical_effective_minimum: requires omega > 0");
  const double w2 = params.omega * params.omega;
  const double lc = params.lambda * c_n;
  const double root = std::sqrt(lc * lc + w2 * c_n);
  return {std::sqrt((lc + root) / w2), root - lc};
}

double quantum_effective_potential(const ModelParams& params, int l, double r) {
  if (l < 0) throw std::domain_error("quantum_effective_potential: l must be >= 0");
  if (!(r > 0.0)) throw std::domain_error("quantum_effective_potential: pole at r = 0");
  const double n = params.dim;
  const double h2 = params.hbar * params.hbar;
  const double d = conformal_factor(params, r);
  const double r2 = r * r;
  const double centrifugal = static_cast<double>(l) * (l + n - 2.0) + n * (n - 4.0) / 4.0;
  const double geometric = h2 * (8.0 * d - 5.0) / (4.0 * r2 * d * d);
  return (geometric + h2 * centrifugal / r2 + params.omega * params.omega * r2) / (2.0 * d);
}

namespace {

double flat_centrifugal_constant(const ModelParams& params, int l) {
  const double n = params.dim;
  return static_cast<double>(l) * (l + n - 2.0) + (n - 1.0) * (n - 3.0) / 4.0;
}

}  // namespace

EffectiveMinimum flat_quantum_effective_minimum(const ModelParams& params, int l) {
  const double c = flat_centrifugal_constant(params, l);
  if (!(c > 0.0) || !(params.omega > 0.0))
    throw std::domain_error("quantum effective potential has no interior minimum");
  const double s = std::sqrt(c);
  return {std::sqrt(params.hbar * s / params.omega), params.hbar * params.omega * s};
}

EffectiveMinimum quantum_effective_minimum(const ModelParams& params, int l) {
  const EffectiveMinimum flat = flat_quantum_effective_minimum(params, l);
  if (params.is_flat()) return flat;

  auto f = [&](double r) { return quantum_effective_potential(params, l, r); };
  // The curved minimum sits to the right of the flat one; U_eff is unimodal.
  const double lo = 1e-3 * flat.r_min;
  double hi = 4.0 * flat.r_min;
  while (f(hi) <= f(0.5 * hi) && hi < 1e8) hi *= 2.0;
  const auto [r_min, u_min] =
      boost::math::tools::brent_find_minima(f, lo, hi, std::numeric_limits<double>::digits / 2);
  return {r_min, u_min};
}

double closed_form_energy(const ModelParams& params, int n) {
  if (n < 0) throw std::domain_error("closed_form_energy: n must be >= 0");
  const double a = n + 0.5 * params.dim;
  const double h = params.hbar;
  if (params.is_flat()) return h * params.omega * a;
  const double x = h * params.lambda * a;
  // hbar a (sqrt(x^2 + omega^2) - x): rationalised to avoid cancellation.
  return h * a * params.omega * params.omega / (std::sqrt(x * x + params.omega * params.omega) + x);
}

double effective_frequency(const ModelParams& params, double energy) {
  const double w2 = params.omega * params.omega - 2.0 * params.lambda * energy;
  if (w2 < 0.0) throw std::domain_error("effective_frequency: energy above continuum threshold");
  return std::sqrt(w2);
}

std::optional<double> continuum_threshold(const ModelParams& params) {
  if (params.is_flat()) return std::nullopt;
  return params.omega * params.omega / (2.0 * params.lambda);
}

std::string format_threshold(const std::optional<double>& threshold) {
  if (!threshold) return "infinity";
  std::ostringstream os;
  os.precision(17);
  os << *threshold;
  return os.str();
}

}  // namespace darboux
