#include "darboux/eigenfunctions.hpp"

#include "darboux/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace darboux::spectra {

namespace {

algebra::Flavor algebra_flavor(RadialFlavor f) {
  switch (f) {
    case RadialFlavor::schrodinger: return algebra::Flavor::schrodinger;
    case RadialFlavor::tlb: return algebra::Flavor::tlb;
    case RadialFlavor::tpdm: return algebra::Flavor::tpdm;
  }
  return algebra::Flavor::tlb;
}

// One factor exp(-beta^2 x^2 / 2) H_k(beta x) and its first two derivatives.
struct Factor {
  double value;
  double d1;
  double d2;
};

Factor hermite_gaussian(int k, double beta, double x) {
  const double y = beta * x;
  const double g = std::exp(-0.5 * y * y);
  const double g1 = -beta * beta * x * g;
  const double g2 = (beta * beta * y * y - beta * beta) * g;
  const double h = hermite(k, y);
  const double h1 = k >= 1 ? 2.0 * k * beta * hermite(k - 1, y) : 0.0;
  const double h2 = k >= 2 ? 4.0 * k * (k - 1) * beta * beta * hermite(k - 2, y) : 0.0;
  return {g * h, g1 * h + g * h1, g2 * h + 2.0 * g1 * h1 + g * h2};
}

// Psi = prod f_i with gradient and Hessian, assembled without division.
struct Jet {
  double value = 0.0;
  std::vector<double> grad;
  std::vector<std::vector<double>> hess;
};

Jet flat_jet(const CartesianEigenfunction& ef, std::span<const double> q) {
  const std::size_t dim = ef.partition.size();
  const double beta = ef.beta();
  std::vector<Factor> f(dim);
  for (std::size_t i = 0; i < dim; ++i) f[i] = hermite_gaussian(ef.partition[i], beta, q[i]);
  auto product = [&](std::size_t a, std::size_t b, int order_a, int order_b) {
    double p = 1.0;
    for (std::size_t k = 0; k < dim; ++k) {
      int order = 0;
      if (k == a) order += order_a;
      if (k == b) order += order_b;
      p *= order == 0 ? f[k].value : order == 1 ? f[k].d1 : f[k].d2;
    }
    return p;
  };
  Jet jet;
  jet.value = product(dim, dim, 0, 0);
  jet.grad.resize(dim);
  jet.hess.assign(dim, std::vector<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    jet.grad[i] = product(i, dim, 1, 0);
    for (std::size_t j = 0; j < dim; ++j) jet.hess[i][j] = product(i, j, 1, 1);
  }
  return jet;
}

// Multiplies the jet by D^s.
Jet with_prefactor(const Jet& psi, double lambda, double s, std::span<const double> q) {
  const std::size_t dim = psi.grad.size();
  double q2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) q2 += q[i] * q[i];
  const double d = 1.0 + lambda * q2;
  const double f = std::pow(d, s);
  std::vector<double> fg(dim);
  for (std::size_t i = 0; i < dim; ++i) fg[i] = 2.0 * s * lambda * q[i] * std::pow(d, s - 1.0);
  Jet out;
  out.value = f * psi.value;
  out.grad.resize(dim);
  out.hess.assign(dim, std::vector<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    out.grad[i] = fg[i] * psi.value + f * psi.grad[i];
    for (std::size_t j = 0; j < dim; ++j) {
      const double fh = (i == j ? 2.0 * s * lambda * std::pow(d, s - 1.0) : 0.0) +
                        4.0 * s * (s - 1.0) * lambda * lambda * q[i] * q[j] * std::pow(d, s - 2.0);
      out.hess[i][j] = fh * psi.value + fg[i] * psi.grad[j] + fg[j] * psi.grad[i] + f * psi.hess[i][j];
    }
  }
  return out;
}

void check_points(const CartesianEigenfunction& ef, const std::vector<std::vector<double>>& points) {
  for (const auto& p : points)
    if (p.size() != ef.partition.size()) throw std::invalid_argument("sample point has the wrong dimension");
}

double largest_magnitude(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double hermite(int n, double x) {
  if (n < 0) throw std::domain_error("hermite: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

int CartesianEigenfunction::n() const { return std::accumulate(partition.begin(), partition.end(), 0); }

double CartesianEigenfunction::energy() const { return closed_form_energy(params, n()); }

double CartesianEigenfunction::beta() const {
  return std::sqrt(effective_frequency(params, energy()) / params.hbar);
}

double CartesianEigenfunction::prefactor_exponent() const {
  const double dim = params.dim;
  switch (flavor) {
    case RadialFlavor::schrodinger: return 0.0;
    case RadialFlavor::tlb: return (2.0 - dim) / 4.0;
    case RadialFlavor::tpdm: return 0.5;
  }
  return 0.0;
}

CartesianEigenfunction make_eigenfunction(const ModelParams& params, std::vector<int> partition,
                                          RadialFlavor flavor) {
  params.validate();
  if (static_cast<int>(partition.size()) != params.dim)
    throw std::invalid_argument("eigenfunction: partition length must equal N");
  if (std::any_of(partition.begin(), partition.end(), [](int k) { return k < 0; }))
    throw std::invalid_argument("eigenfunction: quantum numbers must be >= 0");
  CartesianEigenfunction ef{params, std::move(partition), flavor};
  (void)ef.beta();  // throws above the threshold
  return ef;
}

double eigenfunction_value(const CartesianEigenfunction& ef, std::span<const double> q) {
  if (q.size() != ef.partition.size()) throw std::invalid_argument("eigenfunction_value: dimension");
  const double beta = ef.beta();
  double value = 1.0;
  double q2 = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    value *= std::exp(-0.5 * beta * beta * q[i] * q[i]) * hermite(ef.partition[i], beta * q[i]);
    q2 += q[i] * q[i];
  }
  return std::pow(1.0 + ef.params.lambda * q2, ef.prefactor_exponent()) * value;
}

ResidualReport residual_check(const CartesianEigenfunction& ef, const std::vector<std::vector<double>>& points,
                              std::optional<double> energy) {
  check_points(ef, points);
  const double e = energy.value_or(ef.energy());
  const double omega_eff = effective_frequency(ef.params, ef.energy());
  const double h2 = ef.params.hbar * ef.params.hbar;
  std::vector<Jet> jets;
  std::vector<double> values;
  for (const auto& p : points) {
    jets.push_back(flat_jet(ef, p));
    values.push_back(jets.back().value);
  }
  const double cutoff = 1e-8 * largest_magnitude(values);
  ResidualReport report;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Jet& jet = jets[k];
    if (std::abs(jet.value) < cutoff || jet.value == 0.0) {
      ++report.skipped;
      continue;
    }
    double laplacian = 0.0;
    double q2 = 0.0;
    for (std::size_t i = 0; i < jet.grad.size(); ++i) {
      laplacian += jet.hess[i][i];
      q2 += points[k][i] * points[k][i];
    }
    const double lhs = -h2 * laplacian + omega_eff * omega_eff * q2 * jet.value;
    const double rel = std::abs(lhs - 2.0 * e * jet.value) / std::abs(2.0 * e * jet.value);
    report.max_relative = std::max(report.max_relative, rel);
    ++report.evaluated;
  }
  return report;
}

ResidualReport hamiltonian_residual(const CartesianEigenfunction& ef,
                                    const std::vector<std::vector<double>>& points) {
  check_points(ef, points);
  const algebra::OperatorExpr h = algebra::build_hamiltonian(algebra_flavor(ef.flavor), ef.params.dim);
  const double e = ef.energy();
  const std::complex<double> minus_i_hbar(0.0, -ef.params.hbar);
  std::vector<Jet> jets;
  std::vector<double> values;
  for (const auto& p : points) {
    jets.push_back(with_prefactor(flat_jet(ef, p), ef.params.lambda, ef.prefactor_exponent(), p));
    values.push_back(jets.back().value);
  }
  const double cutoff = 1e-8 * largest_magnitude(values);
  ResidualReport report;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Jet& jet = jets[k];
    if (std::abs(jet.value) < cutoff || jet.value == 0.0) {
      ++report.skipped;
      continue;
    }
    const algebra::Polynomial::Values at{ef.params.lambda, ef.params.omega, ef.params.hbar, points[k]};
    std::complex<double> applied = 0.0;
    for (const auto& [alpha, c] : h.terms()) {
      std::vector<std::size_t> axes;
      for (int i = 0; i < ef.params.dim; ++i)
        for (int r = 0; r < alpha[i]; ++r) axes.push_back(static_cast<std::size_t>(i));
      double derivative = 0.0;
      switch (axes.size()) {
        case 0: derivative = jet.value; break;
        case 1: derivative = jet.grad[axes[0]]; break;
        case 2: derivative = jet.hess[axes[0]][axes[1]]; break;
        default: throw std::logic_error("hamiltonian_residual: momentum order above 2");
      }
      applied += c.evaluate(at) * std::pow(minus_i_hbar, static_cast<int>(axes.size())) * derivative;
    }
    const double rel = std::abs(applied - e * jet.value) / std::abs(e * jet.value);
    report.max_relative = std::max(report.max_relative, rel);
    ++report.evaluated;
  }
  return report;
}

std::vector<std::vector<int>> compositions(int dim, int n) {
  if (dim < 1 || n < 0) throw std::invalid_argument("compositions: need dim >= 1 and n >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(dim), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == dim - 1) {
      current[static_cast<std::size_t>(i)] = left;
      out.push_back(current);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      current[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, n);
  return out;
}

std::int64_t harmonic_dimension(int dim, int l) {
  if (dim < 2 || l < 0) throw std::invalid_argument("harmonic_dimension: need N >= 2 and l >= 0");
  if (dim == 2) return l == 0 ? 1 : 2;
  // (2l + N - 2) (l + N - 3)! / (l! (N - 2)!)
  std::int64_t c = 1;  // C(l + N - 3, l)
  for (int k = 1; k <= l; ++k) c = c * (dim - 3 + k) / k;
  return (2 * l + dim - 2) * c / (dim - 2);
}

DegeneracyCensus degeneracy_census(int dim, int n) {
  if (n < 0) throw std::invalid_argument("degeneracy_census: n must be >= 0");
  DegeneracyCensus census;
  census.dim = dim;
  census.n = n;
  census.cartesian = static_cast<std::int64_t>(compositions(dim, n).size());
  for (int l = n % 2; l <= n; l += 2) {
    const std::int64_t d = harmonic_dimension(dim, l);
    census.by_l.emplace_back(l, d);
    census.radial += d;
  }
  return census;
}

}  // namespace darboux::spectra
