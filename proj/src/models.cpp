#include "balsa/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace balsa {

bool Model::admissible(const double* U) const {
  for (int c = 0; c < n_comp(); ++c)
    if (!std::isfinite(U[c])) return false;
  return true;
}

FlowRegime Model::classify(const double*) const { return FlowRegime::Sub; }

double Model::max_abs_eigenvalue(const double* U) const {
  double lam[kMaxComp];
  eigenvalues(U, lam);
  double m = 0.0;
  for (int c = 0; c < n_comp(); ++c) m = std::max(m, std::abs(lam[c]));
  return m;
}

// ---- scalar models ----------------------------------------------------------

namespace {

// Shared by both scalar models: the stationary family is u = C e^{H}, so the
// continuation of u_anchor is u_anchor * exp(H_j - H_anchor). The anchor node
// multiplies by exp(0) = 1, hence reproduces u_anchor bit for bit.
ExtStatus exponential_extension(double u_anchor, int anchor, std::span<const double> Hs,
                                double* out) {
  const double Ha = Hs[anchor];
  for (std::size_t j = 0; j < Hs.size(); ++j) {
    const double v = u_anchor * std::exp(Hs[j] - Ha);
    if (!std::isfinite(v)) return ExtStatus::NoStationary;
    out[j] = v;
  }
  out[anchor] = u_anchor;
  return ExtStatus::Ok;
}

}  // namespace

void LinearModel::flux(const double* U, double* F) const { F[0] = U[0]; }
void LinearModel::source(const double* U, double* S) const { S[0] = U[0]; }
void LinearModel::eigenvalues(const double*, double* lam) const { lam[0] = 1.0; }
void LinearModel::flux_jacobian(const double*, double* J) const { J[0] = 1.0; }

ExtStatus LinearModel::stationary_extension(const double* U_anchor, int anchor,
                                            std::span<const double> Hs,
                                            std::span<const FlowRegime>, double* out) const {
  return exponential_extension(U_anchor[0], anchor, Hs, out);
}

void BurgersModel::flux(const double* U, double* F) const { F[0] = 0.5 * U[0] * U[0]; }
void BurgersModel::source(const double* U, double* S) const { S[0] = U[0] * U[0]; }
void BurgersModel::eigenvalues(const double* U, double* lam) const { lam[0] = U[0]; }
void BurgersModel::flux_jacobian(const double* U, double* J) const { J[0] = U[0]; }

ExtStatus BurgersModel::stationary_extension(const double* U_anchor, int anchor,
                                             std::span<const double> Hs,
                                             std::span<const FlowRegime>, double* out) const {
  return exponential_extension(U_anchor[0], anchor, Hs, out);
}

// ---- shallow water ----------------------------------------------------------

void ShallowWaterModel::flux(const double* U, double* F) const {
  const double h = U[0], q = U[1];
  F[0] = q;
  F[1] = q * (q / h) + 0.5 * g_ * h * h;
}

void ShallowWaterModel::source(const double* U, double* S) const {
  S[0] = 0.0;
  S[1] = g_ * U[0];
}

void ShallowWaterModel::eigenvalues(const double* U, double* lam) const {
  const double u = U[1] / U[0];
  const double c = std::sqrt(g_ * U[0]);
  lam[0] = u - c;
  lam[1] = u + c;
}

void ShallowWaterModel::flux_jacobian(const double* U, double* J) const {
  const double u = U[1] / U[0];
  J[0] = 0.0;
  J[1] = 1.0;
  J[2] = g_ * U[0] - u * u;
  J[3] = 2.0 * u;
}

bool ShallowWaterModel::admissible(const double* U) const {
  return std::isfinite(U[0]) && std::isfinite(U[1]) && U[0] > 0.0;
}

FlowRegime ShallowWaterModel::classify(const double* U) const {
  const double fr = froude(U[0], U[1], g_);
  if (std::abs(fr - 1.0) <= kCriticalFroudeTol) return FlowRegime::Critical;
  return fr < 1.0 ? FlowRegime::Sub : FlowRegime::Super;
}

SwInvariants sw_invariants(double h, double q, double H, double g) {
  const double u = q / h;
  return SwInvariants{q, 0.5 * u * u + g * h - g * H};
}

double froude(double h, double q, double g) {
  return std::abs(q / h) / std::sqrt(g * h);
}

DepthResult depth_from_invariants(double C1, double C2, double H, FlowRegime want,
                                  double g) {
  const double a = C2 / g + H;
  const double b = 0.5 * C1 * C1 / g;
  auto P = [&](double h) { return ((h - a) * h) * h + b; };

  if (C1 == 0.0) {
    // P = h^2 (h - a): the only positive root is a, and the flow is at rest
    // (subcritical by convention).
    if (want == FlowRegime::Sub && a > 0.0) return {true, a};
    return {};
  }

  const double hc = std::cbrt(C1 * C1 / g);
  const double scale = std::max(1.0, std::abs(C2 / g) * std::abs(C2 / g) * std::abs(C2 / g));
  const double Pc = P(hc);
  // Numerically double root: the critical depth satisfies every branch.
  if (std::abs(Pc) <= 1e-10 * scale) return {true, hc};
  if (want == FlowRegime::Critical) return {};
  if (Pc > 0.0) return {};  // a < 1.5 h_c: no positive roots

  // Analytic brackets: P(h_c) < 0 < P(a) = b and P(0) = b > 0.
  double lo, hi, h;
  if (want == FlowRegime::Sub) {
    lo = hc;
    hi = a;
    h = 1.5 * hc;
  } else {
    lo = 0.0;
    hi = hc;
    h = 0.5 * hc;
  }
  // Sign convention: for Sub, P < 0 on the lo side; for Super, P < 0 on the
  // hi side. Track which endpoint carries the negative sign.
  const bool neg_lo = (want == FlowRegime::Sub);
  double Ph = P(h);
  for (int it = 0; it < 100; ++it) {
    const double dP = h * (3.0 * h - 2.0 * a);
    double hn = (dP != 0.0) ? h - Ph / dP : 0.5 * (lo + hi);
    if (!(hn > lo && hn < hi)) hn = 0.5 * (lo + hi);
    const double Pn = P(hn);
    if ((Pn < 0.0) == neg_lo)
      lo = hn;
    else
      hi = hn;
    const double step = std::abs(hn - h);
    h = hn;
    Ph = Pn;
    if (step <= 1e-13 * std::max(1.0, std::abs(h))) break;
  }
  // Two polishing iterations: quadratic convergence takes the stopping
  // tolerance to the rounding floor, which the well-balanced flux differences
  // inherit directly. Only improving steps are accepted, so the iterate
  // cannot leave the root's basin.
  for (int extra = 0; extra < 2; ++extra) {
    const double dP = h * (3.0 * h - 2.0 * a);
    if (dP == 0.0) break;
    const double hn = h - Ph / dP;
    if (!std::isfinite(hn) || hn <= 0.0) break;
    const double Pn = P(hn);
    if (!(std::abs(Pn) < std::abs(Ph))) break;
    h = hn;
    Ph = Pn;
  }
  return {true, h};
}

ExtStatus war_extension(double h_anchor, int anchor, std::span<const double> Hs,
                        double* out) {
  const double Ha = Hs[anchor];
  for (std::size_t j = 0; j < Hs.size(); ++j) {
    const double h = h_anchor + (Hs[j] - Ha);
    if (!(h > 0.0)) return ExtStatus::NoStationary;
    out[2 * j] = h;
    out[2 * j + 1] = 0.0;
  }
  return ExtStatus::Ok;
}

void sw_viscosity_vector(const double* U, double H, double g, double* G) {
  const double u = U[1] / U[0];
  G[0] = U[0] - H + 0.5 * u * u / g;
  G[1] = U[1];
}

ExtStatus ShallowWaterModel::stationary_extension(const double* U_anchor, int anchor,
                                                  std::span<const double> Hs,
                                                  std::span<const FlowRegime> regimes,
                                                  double* out) const {
  const int len = static_cast<int>(Hs.size());
  const double Ha = Hs[anchor];

  // Constant bottom across the window: the stationary solution through the
  // anchor is the constant state, exactly.
  bool flat = true;
  for (int j = 0; j < len; ++j)
    if (Hs[j] != Ha) {
      flat = false;
      break;
    }
  if (flat) {
    for (int j = 0; j < len; ++j) {
      out[2 * j] = U_anchor[0];
      out[2 * j + 1] = U_anchor[1];
    }
    return ExtStatus::Ok;
  }

  const SwInvariants inv = sw_invariants(U_anchor[0], U_anchor[1], Ha, g_);
  const FlowRegime reg_anchor = classify(U_anchor);

  // Branch targets per node from the window's data regimes.
  std::array<FlowRegime, 16> targets;
  if (len > static_cast<int>(targets.size()))
    throw std::invalid_argument("stationary_extension: window too wide");
  bool has_sub = false, has_super = false;
  for (int j = 0; j < len; ++j) {
    if (regimes[j] == FlowRegime::Sub) has_sub = true;
    if (regimes[j] == FlowRegime::Super) has_super = true;
  }
  if (has_sub && has_super) {
    // Transition stencil: admissible only across a bottom minimum at a node
    // where the invariants turn critical, with one regime on each side.
    int mstar = -1;
    FlowRegime left_reg = FlowRegime::Critical, right_reg = FlowRegime::Critical;
    for (int m = 1; m + 1 < len; ++m) {
      if (!(Hs[m] <= Hs[m - 1] && Hs[m] <= Hs[m + 1])) continue;
      if (!depth_from_invariants(inv.C1, inv.C2, Hs[m], FlowRegime::Critical, g_).ok)
        continue;
      FlowRegime lr = FlowRegime::Critical, rr = FlowRegime::Critical;
      bool uniform = true;
      for (int j = 0; j < m && uniform; ++j) {
        if (regimes[j] == FlowRegime::Critical) continue;
        if (lr == FlowRegime::Critical) lr = regimes[j];
        else if (regimes[j] != lr) uniform = false;
      }
      for (int j = m + 1; j < len && uniform; ++j) {
        if (regimes[j] == FlowRegime::Critical) continue;
        if (rr == FlowRegime::Critical) rr = regimes[j];
        else if (regimes[j] != rr) uniform = false;
      }
      if (!uniform) continue;
      mstar = m;
      left_reg = lr;
      right_reg = rr;
      break;
    }
    if (mstar < 0) return ExtStatus::NoStationary;
    for (int j = 0; j < len; ++j)
      targets[j] = (j < mstar) ? left_reg : (j == mstar ? FlowRegime::Critical : right_reg);
  } else {
    const FlowRegime all = has_super  ? FlowRegime::Super
                           : has_sub ? FlowRegime::Sub
                                     : FlowRegime::Critical;
    for (int j = 0; j < len; ++j) targets[j] = all;
  }

  for (int j = 0; j < len; ++j) {
    if (j == anchor) continue;
    if (Hs[j] == Ha && (targets[j] == reg_anchor || reg_anchor == FlowRegime::Critical)) {
      // Same bottom value and same branch: the continuation repeats the
      // anchor state (double roots satisfy every branch).
      out[2 * j] = U_anchor[0];
      out[2 * j + 1] = U_anchor[1];
      continue;
    }
    const DepthResult dr = depth_from_invariants(inv.C1, inv.C2, Hs[j], targets[j], g_);
    if (!dr.ok) return ExtStatus::NoStationary;
    out[2 * j] = dr.h;
    out[2 * j + 1] = inv.C1;
  }
  out[2 * anchor] = U_anchor[0];
  out[2 * anchor + 1] = U_anchor[1];
  return ExtStatus::Ok;
}

std::unique_ptr<Model> make_model(const std::string& name, double g) {
  if (name == "linear") return std::make_unique<LinearModel>();
  if (name == "burgers") return std::make_unique<BurgersModel>();
  if (name == "sw") return std::make_unique<ShallowWaterModel>(g);
  throw std::invalid_argument("unknown model: " + name);
}

}  // namespace balsa
