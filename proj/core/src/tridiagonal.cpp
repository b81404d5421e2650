#include "darboux/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>
#include <stdexcept>

namespace darboux::spectra {

std::size_t count_below(const SymmetricTridiagonal& t, double x) {
  const std::size_t n = t.size();
  std::size_t count = 0;
  double d = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    d = (t.diag[i] - x) - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

namespace {

std::pair<double, double> gershgorin(const SymmetricTridiagonal& t) {
  const std::size_t n = t.size();
  if (t.off.size() + 1 != n) throw std::invalid_argument("tridiagonal: malformed matrix");
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = 1e-12 * std::max(std::abs(lo), std::abs(hi)) + 1e-300;
  return {lo - pad, hi + pad};
}

double bisect(const SymmetricTridiagonal& t, std::size_t j, double a, double b, double rel_tol,
              double abs_tol, double* lower_end) {
  // Eigenvalue j is the smallest x with count_below(x) > j.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (count_below(t, mid) > j)
      b = mid;
    else
      a = mid;
    if (b - a <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b))) break;
  }
  if (lower_end) *lower_end = a;
  return 0.5 * (a + b);
}

}  // namespace

double eigenvalue_at(const SymmetricTridiagonal& t, std::size_t index, double rel_tol) {
  if (index >= t.size()) throw std::out_of_range("eigenvalue_at: index");
  const auto [lo, hi] = gershgorin(t);
  return bisect(t, index, lo, hi, rel_tol, 0.0, nullptr);
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k,
                                       double rel_tol, double abs_tol) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  k = std::min(k, n);
  const auto [lo, hi] = gershgorin(t);

  std::vector<double> values;
  values.reserve(k);
  double floor = lo;
  for (std::size_t j = 0; j < k; ++j) {
    values.push_back(bisect(t, j, floor, hi, rel_tol, abs_tol, &floor));
  }
  return values;
}

std::vector<double> apply(const SymmetricTridiagonal& t, const std::vector<double>& x) {
  const std::size_t n = t.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = t.diag[i] * x[i];
    if (i > 0) s += t.off[i - 1] * x[i - 1];
    if (i + 1 < n) s += t.off[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

std::vector<double> eigenvector(const SymmetricTridiagonal& t, double eigenvalue) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  // Shift slightly off the eigenvalue so the factorization stays regular.
  double scale = 0.0;
  for (double d : t.diag) scale = std::max(scale, std::abs(d));
  const double shift = eigenvalue + 1e-13 * std::max(scale, 1.0);

  // LU with partial pivoting of the tridiagonal T - shift I (row interchanges
  // produce a second superdiagonal).
  std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0), l(n, 0.0);
  std::vector<char> swapped(n, 0);
  std::vector<double> sub(t.off);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) u1[i] = t.off[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double below = sub[i];
    if (std::abs(below) > std::abs(d[i])) {
      swapped[i] = 1;
      const double m = d[i] / below;
      l[i] = m;
      const double nd = u1[i] - m * d[i + 1];
      const double nu = -m * (i + 2 < n ? u1[i + 1] : 0.0);
      d[i] = below;
      u2[i] = i + 2 < n ? u1[i + 1] : 0.0;
      u1[i] = d[i + 1];
      d[i + 1] = nd;
      if (i + 2 < n) u1[i + 1] = nu;
    } else {
      const double m = d[i] == 0.0 ? 0.0 : below / d[i];
      l[i] = m;
      d[i + 1] -= m * u1[i];
    }
  }
  for (double& v : d)
    if (v == 0.0) v = 1e-300;

  auto solve = [&](std::vector<double> b) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        std::swap(b[i], b[i + 1]);
        b[i + 1] -= l[i] * b[i];
      } else {
        b[i + 1] -= l[i] * b[i];
      }
    }
    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
      double s = b[ii];
      if (ii + 1 < n) s -= u1[ii] * x[ii + 1];
      if (ii + 2 < n) s -= u2[ii] * x[ii + 2];
      x[ii] = s / d[ii];
    }
    return x;
  };

  std::vector<double> x(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 1e-3 * std::sin(0.7 * static_cast<double>(i));
  for (int iter = 0; iter < 4; ++iter) {
    x = solve(x);
    const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    for (double& v : x) v /= norm;
  }
  // Fix the sign so the first significant component is positive.
  for (double v : x) {
    if (std::abs(v) > 1e-8) {
      if (v < 0.0)
        for (double& w : x) w = -w;
      break;
    }
  }
  return x;
}

}  // namespace darboux::spectra
