// Independent reference implementations used to validate the library.
// Everything here is derived from first principles (primitive-function
// reconstruction, brute-force root scans, finite differences) and must not
// include any library header, so that tests compare two unrelated routes
// to the same numbers.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

// ---- polynomial interpolation ---------------------------------------------

// Neville's algorithm: value at x of the polynomial through (xs[m], ys[m]).
inline double neville(const std::vector<double>& xs, const std::vector<double>& ys,
                      double x) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("neville: bad sizes");
  std::vector<double> p = ys;
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t m = 0; m + level < n; ++m)
      p[m] = ((x - xs[m + level]) * p[m] + (xs[m] - x) * p[m + 1]) / (xs[m] - xs[m + level]);
  return p[0];
}

// First derivative at x of the Lagrange interpolant through (xs[m], ys[m]).
inline double lagrange_derivative(const std::vector<double>& xs,
                                  const std::vector<double>& ys, double x) {
  const std::size_t n = xs.size();
  if (ys.size() != n || n < 2) throw std::invalid_argument("lagrange_derivative: bad sizes");
  double acc = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    // L_m'(x) = sum_j (1/(x_m - x_j)) prod_{l != m,j} (x - x_l)/(x_m - x_l)
    double dl = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == m) continue;
      double term = 1.0 / (xs[m] - xs[j]);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == m || l == j) continue;
        term *= (x - xs[l]) / (xs[m] - xs[l]);
      }
      dl += term;
    }
    acc += ys[m] * dl;
  }
  return acc;
}

// Second derivative at x of the Lagrange interpolant.
inline double lagrange_derivative2(const std::vector<double>& xs,
                                   const std::vector<double>& ys, double x) {
  const std::size_t n = xs.size();
  if (ys.size() != n || n < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    double d2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == m) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == m || i == j) continue;
        double term = 1.0 / ((xs[m] - xs[j]) * (xs[m] - xs[i]));
        for (std::size_t l = 0; l < n; ++l) {
          if (l == m || l == j || l == i) continue;
          term *= (x - xs[l]) / (xs[m] - xs[l]);
        }
        d2 += term;
      }
    }
    acc += ys[m] * d2;
  }
  return acc;
}

// ---- reconstruction from cell averages -------------------------------------

// Point value at `x` of the reconstruction polynomial defined by the cell
// averages w[0..m) on unit cells centered at 0,1,...,m-1, obtained by
// differentiating the interpolant of the primitive W(x) = integral of w.
// This is the classical definition; no stencil coefficient tables involved.
inline double reconstruct_point(const std::vector<double>& averages, double x) {
  const std::size_t m = averages.size();
  std::vector<double> xs(m + 1), ws(m + 1);
  xs[0] = -0.5;
  ws[0] = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    xs[j + 1] = static_cast<double>(j) + 0.5;
    ws[j + 1] = ws[j] + averages[j];
  }
  return lagrange_derivative(xs, ws, x);
}

// Derivative of the reconstruction polynomial (for smoothness indicators).
inline double reconstruct_point_deriv(const std::vector<double>& averages, double x) {
  const std::size_t m = averages.size();
  std::vector<double> xs(m + 1), ws(m + 1);
  xs[0] = -0.5;
  ws[0] = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    xs[j + 1] = static_cast<double>(j) + 0.5;
    ws[j + 1] = ws[j] + averages[j];
  }
  return lagrange_derivative2(xs, ws, x);
}

// Left-biased interface value from a (2k+1)-wide window of averages
// (w_{i-k},...,w_{i+k}): reconstruction at the right edge of the center cell.
inline double interface_value_full(const std::vector<double>& window) {
  if (window.size() % 2 == 0) throw std::invalid_argument("interface_value_full: even window");
  const double k = (static_cast<double>(window.size()) - 1.0) / 2.0;
  return reconstruct_point(window, k + 0.5);
}

// Candidate value from sub-stencil r (r cells to the left of the center):
// window is the full (2k+1) set, sub-stencil covers cells i-r..i-r+k.
inline double substencil_value(const std::vector<double>& window, int k, int r) {
  std::vector<double> sub(window.begin() + (k - r), window.begin() + (k - r) + (k + 1));
  // Within the sub-window the center cell sits at local index r; interface at r+0.5.
  return reconstruct_point(sub, static_cast<double>(r) + 0.5);
}

// Jiang-Shu smoothness indicator for sub-stencil r computed from its integral
// definition: beta = sum_l integral over the center cell of (d^l p / dx^l)^2
// (unit cell width). The integrand is polynomial of degree <= 2, so 3-point
// Gauss-Legendre quadrature on [-1/2, 1/2] is exact.
inline double beta_indicator(const std::vector<double>& window, int k, int r) {
  std::vector<double> sub(window.begin() + (k - r), window.begin() + (k - r) + (k + 1));
  // Center cell of the full window has local coordinate r within the sub-window.
  const double c = static_cast<double>(r);
  const double half = 0.5;
  const std::array<double, 3> nodes = {-std::sqrt(3.0 / 5.0) * half, 0.0,
                                       std::sqrt(3.0 / 5.0) * half};
  const std::array<double, 3> wq = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  double beta = 0.0;
  for (int l = 0; l < 3; ++l) {
    const double x = c + nodes[l];
    const double d1 = reconstruct_point_deriv(sub, x);
    beta += wq[l] * d1 * d1;
  }
  if (k >= 2) {
    // Second derivative of a quadratic is constant.
    std::vector<double> xs(sub.size() + 1), ws(sub.size() + 1);
    xs[0] = -0.5;
    ws[0] = 0.0;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      xs[j + 1] = static_cast<double>(j) + 0.5;
      ws[j + 1] = ws[j] + sub[j];
    }
    // d2 of reconstruction = d3 of primitive: estimate via derivative2 of the
    // derivative polynomial is messy; use finite difference of d1 instead
    // (exact for polynomials up to the rounding level).
    const double h = 0.5;
    const double d2 = (reconstruct_point_deriv(sub, c + h) - reconstruct_point_deriv(sub, c - h)) / (2.0 * h);
    beta += d2 * d2;  // integral over unit cell of a constant squared
  }
  return beta;
}

// ---- cubic root scan --------------------------------------------------------

// All roots of P(h) = h^3 - a h^2 + b on [lo, hi] found by a brute-force sign
// scan over n uniform intervals, each refined by bisection.
inline std::vector<double> cubic_sign_scan(double a, double b, double lo, double hi,
                                           int n = 200000) {
  auto P = [&](double h) { return ((h - a) * h) * h + b; };
  std::vector<double> roots;
  double x0 = lo, f0 = P(lo);
  for (int m = 1; m <= n; ++m) {
    const double x1 = lo + (hi - lo) * static_cast<double>(m) / n;
    const double f1 = P(x1);
    if (f0 == 0.0) roots.push_back(x0);
    else if (f0 * f1 < 0.0) {
      double u = x0, v = x1;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (u + v);
        if (P(u) * P(mid) <= 0.0) v = mid; else u = mid;
      }
      roots.push_back(0.5 * (u + v));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

// ---- finite differences -----------------------------------------------------

// Centered finite-difference Jacobian of a map R^n -> R^n.
inline std::vector<double> fd_jacobian(const std::function<std::vector<double>(const std::vector<double>&)>& f,
                                       std::vector<double> U, double eps = 1e-6) {
  const std::size_t n = U.size();
  std::vector<double> J(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> Up = U, Um = U;
    Up[j] += eps;
    Um[j] -= eps;
    const auto fp = f(Up), fm = f(Um);
    for (std::size_t i = 0; i < n; ++i) J[i * n + j] = (fp[i] - fm[i]) / (2.0 * eps);
  }
  return J;
}

// Richardson-extrapolated central derivative of a scalar function.
inline double richardson_derivative(const std::function<double(double)>& f, double x,
                                    double h = 1e-4) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + h / 2) - f(x - h / 2)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

// ---- convergence helpers ----------------------------------------------------

// log2(e_coarse / e_fine): observed order under mesh halving.
inline double observed_order(double e_coarse, double e_fine) {
  return std::log2(e_coarse / e_fine);
}

// One step of the classical explicit RK3 (Shu-Osher) applied to u' = lam*u
// equals multiplication by 1 + z + z^2/2 + z^3/6 with z = lam*dt.
inline double rk3_growth(double z) { return 1.0 + z + z * z / 2.0 + z * z * z / 6.0; }

// ---- 2x2 eigen structure ----------------------------------------------------

struct Eig2 {
  std::array<double, 2> lambda;       // ascending
  std::array<std::array<double, 2>, 2> vec;  // vec[m] is the eigenvector of lambda[m]
  bool real_distinct = false;
};

inline Eig2 eig2(const std::array<double, 4>& A) {
  // A = [a b; c d] row-major.
  Eig2 out;
  const double a = A[0], b = A[1], c = A[2], d = A[3];
  const double tr = a + d, det = a * d - b * c;
  const double disc = tr * tr - 4.0 * det;
  if (disc <= 0.0) return out;
  const double s = std::sqrt(disc);
  out.lambda = {(tr - s) / 2.0, (tr + s) / 2.0};
  for (int m = 0; m < 2; ++m) {
    const double lam = out.lambda[m];
    // Null vector of A - lam I; pick the better conditioned row.
    if (std::abs(b) > std::abs(c))
      out.vec[m] = {b, lam - a};
    else if (std::abs(c) > 0.0)
      out.vec[m] = {lam - d, c};
    else
      out.vec[m] = {m == 0 ? 1.0 : 0.0, m == 0 ? 0.0 : 1.0};
    const double norm = std::hypot(out.vec[m][0], out.vec[m][1]);
    out.vec[m][0] /= norm;
    out.vec[m][1] /= norm;
  }
  out.real_distinct = true;
  return out;
}

}  // namespace oracles
