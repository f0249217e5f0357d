#include "balsa/stationary_ode.hpp"

#include <cmath>

namespace balsa {

namespace {

// Solves J dU = S H_x at (x, U); reports resonance when J is numerically
// singular. n is 1 or 2.
bool slope(const Model& model, const std::function<double(double)>& Hx, double x,
           const double* U, double* dU, bool* resonant) {
  const int n = model.n_comp();
  double J[kMaxComp * kMaxComp], S[kMaxComp];
  model.flux_jacobian(U, J);
  model.source(U, S);
  const double hx = Hx(x);
  if (n == 1) {
    const double det = J[0];
    if (std::abs(det) <= 1e-12 * std::abs(J[0])) {  // fires only at det == 0
      *resonant = true;
      return false;
    }
    dU[0] = S[0] * hx / det;
    return true;
  }
  const double det = J[0] * J[3] - J[1] * J[2];
  const double norm = std::max(std::abs(J[0]) + std::abs(J[1]), std::abs(J[2]) + std::abs(J[3]));
  if (std::abs(det) <= 1e-12 * norm) {
    *resonant = true;
    return false;
  }
  const double r0 = S[0] * hx, r1 = S[1] * hx;
  dU[0] = (J[3] * r0 - J[1] * r1) / det;
  dU[1] = (J[0] * r1 - J[2] * r0) / det;
  return true;
}

// Classical RK4 update of size h; returns false on resonance or blowup.
bool rk4_step(const Model& model, const std::function<double(double)>& Hx, double x,
              double* U, double h, bool* resonant) {
  const int n = model.n_comp();
  double k1[kMaxComp], k2[kMaxComp], k3[kMaxComp], k4[kMaxComp], tmp[kMaxComp];
  if (!slope(model, Hx, x, U, k1, resonant)) return false;
  for (int c = 0; c < n; ++c) tmp[c] = U[c] + 0.5 * h * k1[c];
  if (!model.admissible(tmp)) return false;
  if (!slope(model, Hx, x + 0.5 * h, tmp, k2, resonant)) return false;
  for (int c = 0; c < n; ++c) tmp[c] = U[c] + 0.5 * h * k2[c];
  if (!model.admissible(tmp)) return false;
  if (!slope(model, Hx, x + 0.5 * h, tmp, k3, resonant)) return false;
  for (int c = 0; c < n; ++c) tmp[c] = U[c] + h * k3[c];
  if (!model.admissible(tmp)) return false;
  if (!slope(model, Hx, x + h, tmp, k4, resonant)) return false;
  for (int c = 0; c < n; ++c)
    U[c] += (h / 6.0) * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
  return model.admissible(U);
}

OdeStatus march(const Model& model, const std::function<double(double)>& Hx,
                const double* U0, double x0, double dx, int gaps, int K, double* out,
                double direction) {
  const int n = model.n_comp();
  const double h = direction * dx / K;
  double U[kMaxComp];
  for (int c = 0; c < n; ++c) U[c] = U0[c];
  double x = x0;
  bool resonant = false;
  for (int gp = 0; gp < gaps; ++gp) {
    for (int s = 0; s < K; ++s) {
      if (!rk4_step(model, Hx, x, U, h, &resonant))
        return resonant ? OdeStatus::Resonant : OdeStatus::Blowup;
      x += h;
    }
    // Land each gap on the exact node coordinate to avoid drift.
    x = x0 + direction * dx * (gp + 1);
    for (int c = 0; c < n; ++c) out[gp * n + c] = U[c];
  }
  return OdeStatus::Ok;
}

}  // namespace

int default_substeps(int k) { return 4 * (2 * k + 1); }

OdeStatus extend_forward(const Model& model, const std::function<double(double)>& Hx,
                         const double* U0, double x0, double dx, int gaps, int K,
                         double* out) {
  return march(model, Hx, U0, x0, dx, gaps, K, out, +1.0);
}

OdeStatus extend_backward(const Model& model, const std::function<double(double)>& Hx,
                          const double* U0, double x0, double dx, int gaps, int K,
                          double* out) {
  return march(model, Hx, U0, x0, dx, gaps, K, out, -1.0);
}

}  // namespace balsa
