#include "balsa/schemes.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "balsa/stationary_ode.hpp"

namespace balsa {

int ghost_width(const SchemeConfig& cfg) { return cfg.k() + 1; }

namespace {

// ---- projections ------------------------------------------------------------

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

bool projection_from_state(const Model& model, const double* Um, double* Pp, double* Pm) {
  const int n = model.n_comp();
  if (n == 1) {
    double J;
    model.flux_jacobian(Um, &J);
    const double s = sign_of(J);
    Pp[0] = 0.5 * (1.0 + s);
    Pm[0] = 0.5 * (1.0 - s);
    return true;
  }
  double J[4];
  model.flux_jacobian(Um, J);
  const double tr = J[0] + J[3];
  const double det = J[0] * J[3] - J[1] * J[2];
  const double disc = tr * tr - 4.0 * det;
  if (!(disc > 0.0)) return false;
  const double sq = std::sqrt(disc);
  const double lam[2] = {0.5 * (tr - sq), 0.5 * (tr + sq)};
  double K[4];  // right eigenvectors as columns
  for (int m = 0; m < 2; ++m) {
    double v0, v1;
    if (std::abs(J[1]) >= std::abs(J[2])) {
      v0 = J[1];
      v1 = lam[m] - J[0];
    } else {
      v0 = lam[m] - J[3];
      v1 = J[2];
    }
    K[0 + m] = v0;
    K[2 + m] = v1;
  }
  const double dK = K[0] * K[3] - K[1] * K[2];
  if (dK == 0.0) return false;
  const double Ki[4] = {K[3] / dK, -K[1] / dK, -K[2] / dK, K[0] / dK};
  auto build = [&](double* P, bool plus) {
    double d[2];
    for (int m = 0; m < 2; ++m) {
      const int s = sign_of(lam[m]);
      d[m] = plus ? 0.5 * (1.0 + s) : 0.5 * (1.0 - s);
    }
    // P = K diag(d) K^{-1}
    P[0] = K[0] * d[0] * Ki[0] + K[1] * d[1] * Ki[2];
    P[1] = K[0] * d[0] * Ki[1] + K[1] * d[1] * Ki[3];
    P[2] = K[2] * d[0] * Ki[0] + K[3] * d[1] * Ki[2];
    P[3] = K[2] * d[0] * Ki[1] + K[3] * d[1] * Ki[3];
  };
  build(Pp, true);
  build(Pm, false);
  return true;
}

void apply_matrix(int n, const double* P, const double* v, double* out) {
  if (n == 1) {
    out[0] = P[0] * v[0];
    return;
  }
  out[0] = P[0] * v[0] + P[1] * v[1];
  out[1] = P[2] * v[0] + P[3] * v[1];
}

// ---- shared per-call context --------------------------------------------------

struct RhsContext {
  const SchemeConfig* cfg;
  const Model* model;
  const Bathymetry* bath;
  const Grid* grid;
  const StateField* U;
  int n, nc, k, gw;
  double dx;
  ReconstructionConfig rc;
  std::vector<double> H, Hx;            // extended nodes, index e = i + gw
  std::vector<double> F;                // nodal fluxes, e * nc + c
  std::vector<FlowRegime> regimes;      // extended
  double alpha = 0.0;                   // global LF viscosity
  std::vector<int> jumps;               // interior jump interface indices m
  // lazily computed standard interface fluxes (for fallbacks)
  std::vector<char> have_std;
  std::vector<double> std_flux;         // (n+1) * nc

  int ext(int i) const { return i + gw; }
};

void load_state(const StateField& U, int nc, int i, double* out) {
  for (int c = 0; c < nc; ++c) out[c] = U.at(c, i);
}

RhsContext make_context(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
                        const Grid& grid, const StateField& U) {
  RhsContext cx;
  cx.cfg = &cfg;
  cx.model = &model;
  cx.bath = &bath;
  cx.grid = &grid;
  cx.U = &U;
  cx.n = grid.n;
  cx.nc = model.n_comp();
  cx.k = cfg.k();
  cx.gw = cx.k + 1;
  cx.dx = grid.dx();
  cx.rc = ReconstructionConfig{cx.k, cfg.weights, cfg.eps};
  if (U.n_comp() != cx.nc) throw std::invalid_argument("compute_rhs: component mismatch");
  if (U.ghost() < cx.gw) throw std::invalid_argument("compute_rhs: not enough ghost nodes");

  const int ne = cx.n + 2 * cx.gw;
  cx.H.resize(ne);
  cx.Hx.resize(ne);
  cx.F.resize(static_cast<std::size_t>(ne) * cx.nc);
  cx.regimes.resize(ne);
  double Ui[kMaxComp], Fi[kMaxComp];
  for (int i = -cx.gw; i < cx.n + cx.gw; ++i) {
    const int e = cx.ext(i);
    const double x = grid.x(i);
    cx.H[e] = bath.H(x);
    cx.Hx[e] = bath.Hx(x);
    load_state(U, cx.nc, i, Ui);
    model.flux(Ui, Fi);
    for (int c = 0; c < cx.nc; ++c) cx.F[static_cast<std::size_t>(e) * cx.nc + c] = Fi[c];
    cx.regimes[e] = model.classify(Ui);
    cx.alpha = std::max(cx.alpha, model.max_abs_eigenvalue(Ui));
  }

  for (const auto& jmp : bath.jumps) {
    if (jmp.x <= grid.x_lo || jmp.x >= grid.x_hi) continue;
    const double m_real = (jmp.x - grid.x_lo) / cx.dx;
    const int m = static_cast<int>(std::lround(m_real));
    if (std::abs(m_real - m) > 1e-9 * std::max(1.0, std::abs(m_real)))
      throw std::runtime_error("bottom jump must lie on a cell interface");
    cx.jumps.push_back(m);
  }

  cx.have_std.assign(cx.n + 1, 0);
  cx.std_flux.assign(static_cast<std::size_t>(cx.n + 1) * cx.nc, 0.0);
  return cx;
}

// Local LF viscosity for interface m (between nodes m-1 and m).
double local_alpha(const RhsContext& cx, int m) {
  double a = 0.0;
  double Uj[kMaxComp];
  for (int j = m - 1 - cx.k; j <= m + cx.k; ++j) {
    load_state(*cx.U, cx.nc, j, Uj);
    a = std::max(a, cx.model->max_abs_eigenvalue(Uj));
  }
  return a;
}

// ---- standard interface flux ---------------------------------------------------

// Computes the conservative interface flux at interface m into out[nc].
void standard_interface_flux(RhsContext& cx, int m, double* out) {
  const int k = cx.k, nc = cx.nc;
  double winL[5], winR[5];
  switch (cx.cfg->splitting) {
    case Splitting::GlobalLF:
    case Splitting::LocalLF: {
      const double a = (cx.cfg->splitting == Splitting::GlobalLF) ? cx.alpha : local_alpha(cx, m);
      for (int c = 0; c < nc; ++c) {
        for (int t = 0; t < 2 * k + 1; ++t) {
          const int jL = m - 1 - k + t;  // window centered at node m-1
          const int jR = m - k + t;      // window centered at node m
          winL[t] = 0.5 * (cx.F[static_cast<std::size_t>(cx.ext(jL)) * nc + c] +
                           a * cx.U->at(c, jL));
          winR[t] = 0.5 * (cx.F[static_cast<std::size_t>(cx.ext(jR)) * nc + c] -
                           a * cx.U->at(c, jR));
        }
        out[c] = reconstruct_left(cx.rc, std::span<const double>(winL, 2 * k + 1)) +
                 reconstruct_right(cx.rc, std::span<const double>(winR, 2 * k + 1));
      }
      break;
    }
    case Splitting::UpwindProjection: {
      double UL[kMaxComp]{}, UR[kMaxComp]{}, Um[kMaxComp]{};
      load_state(*cx.U, nc, m - 1, UL);
      load_state(*cx.U, nc, m, UR);
      for (int c = 0; c < nc; ++c) Um[c] = 0.5 * (UL[c] + UR[c]);
      double Pp[4], Pm[4];
      if (!projection_from_state(*cx.model, Um, Pp, Pm))
        throw std::runtime_error("upwind projection: defective eigenstructure");
      double rl[kMaxComp], rr[kMaxComp];
      for (int c = 0; c < nc; ++c) {
        for (int t = 0; t < 2 * k + 1; ++t) {
          winL[t] = cx.F[static_cast<std::size_t>(cx.ext(m - 1 - k + t)) * nc + c];
          winR[t] = cx.F[static_cast<std::size_t>(cx.ext(m - k + t)) * nc + c];
        }
        rl[c] = reconstruct_left(cx.rc, std::span<const double>(winL, 2 * k + 1));
        rr[c] = reconstruct_right(cx.rc, std::span<const double>(winR, 2 * k + 1));
      }
      double fp[kMaxComp], fm[kMaxComp];
      apply_matrix(nc, Pp, rl, fp);
      apply_matrix(nc, Pm, rr, fm);
      for (int c = 0; c < nc; ++c) out[c] = fp[c] + fm[c];
      break;
    }
  }
}

const double* cached_standard_flux(RhsContext& cx, int m) {
  double* slot = cx.std_flux.data() + static_cast<std::size_t>(m) * cx.nc;
  if (!cx.have_std[m]) {
    standard_interface_flux(cx, m, slot);
    cx.have_std[m] = 1;
  }
  return slot;
}

// ---- singular (jump) source corrections ----------------------------------------

// Intermediate source value at a jump interface per the configured rule.
void jump_source_value(const RhsContext& cx, const double* UL, const double* UR,
                       double* S_mid) {
  const int nc = cx.nc;
  double Um[kMaxComp];
  for (int c = 0; c < nc; ++c) Um[c] = 0.5 * (UL[c] + UR[c]);
  if (cx.cfg->singular == SingularSourceMode::Centered) {
    cx.model->source(Um, S_mid);
    return;
  }
  // Upwinded: select by the sign of the advective speed of the mean state.
  double speed;
  if (nc == 1) {
    double J;
    cx.model->flux_jacobian(Um, &J);
    speed = J;
  } else {
    speed = Um[1] / Um[0];
  }
  const double wp = 0.5 * (1.0 + sign_of(speed));
  const double wm = 0.5 * (1.0 - sign_of(speed));
  double SL[kMaxComp], SR[kMaxComp];
  cx.model->source(UL, SL);
  cx.model->source(UR, SR);
  for (int c = 0; c < nc; ++c) S_mid[c] = wp * SL[c] + wm * SR[c];
}

// Adds the Dirac correction from jump interface m to the rhs of node i
// (i must be m-1 or m). When `ref` is non-null the correction is the
// difference between the field term and the reference term (WBSingle).
void add_jump_correction(RhsContext& cx, int m, int i, StateField& rhs,
                         const std::vector<double>* ref_states) {
  const int nc = cx.nc;
  if (i < 0 || i >= cx.n) return;
  double UL[kMaxComp], UR[kMaxComp];
  load_state(*cx.U, nc, m - 1, UL);
  load_state(*cx.U, nc, m, UR);
  double Um[kMaxComp];
  for (int c = 0; c < nc; ++c) Um[c] = 0.5 * (UL[c] + UR[c]);
  double Pp[4], Pm[4];
  if (!projection_from_state(*cx.model, Um, Pp, Pm))
    throw std::runtime_error("jump correction: defective eigenstructure");

  double S_mid[kMaxComp];
  jump_source_value(cx, UL, UR, S_mid);
  if (ref_states) {
    // Subtract the same rule evaluated on the reference states, using the
    // field-based projection so the pair cancels exactly at the reference.
    const double* RL = ref_states->data() + static_cast<std::size_t>(cx.ext(m - 1)) * nc;
    const double* RR = ref_states->data() + static_cast<std::size_t>(cx.ext(m)) * nc;
    double S_ref[kMaxComp];
    jump_source_value(cx, RL, RR, S_ref);
    for (int c = 0; c < nc; ++c) S_mid[c] -= S_ref[c];
  }

  const double dH = (cx.H[cx.ext(m)] - cx.H[cx.ext(m - 1)]) / cx.dx;
  double term[kMaxComp];
  apply_matrix(nc, (i == m) ? Pp : Pm, S_mid, term);
  for (int c = 0; c < nc; ++c) rhs.at(c, i) += term[c] * dH;
}

// Standard-scheme right-hand side at a single node (used for the standard
// family and as the per-node fallback inside the well-balanced families).
void standard_node_rhs(RhsContext& cx, int i, StateField& rhs) {
  const int nc = cx.nc;
  const double* fl = cached_standard_flux(cx, i);
  const double* fr = cached_standard_flux(cx, i + 1);
  double Ui[kMaxComp], S[kMaxComp];
  load_state(*cx.U, nc, i, Ui);
  cx.model->source(Ui, S);
  const double hx = cx.Hx[cx.ext(i)];
  for (int c = 0; c < nc; ++c) rhs.at(c, i) = -(fr[c] - fl[c]) / cx.dx + S[c] * hx;
  for (int m : cx.jumps)
    if (i == m - 1 || i == m) add_jump_correction(cx, m, i, rhs, nullptr);
}

// ---- well-balanced per-node assembly --------------------------------------------

enum class WbKind { Full, WaterAtRest, MassCons };

// True when a registered bottom jump interface lies inside the extension
// window [i-k-1, i+k+1] of node i.
bool window_crosses_jump(const RhsContext& cx, int i) {
  for (int m : cx.jumps)
    if (m >= i - cx.k && m <= i + cx.k + 1) return true;
  return false;
}

// Last-resort extension for shallow-water windows crossing a bottom jump. A
// failed continuation here must not fall back to the standard assembly: the
// midpoint Dirac weight the fallback uses is off by O(1) on a finite jump,
// and the injected error re-perturbs the neighborhood so the extension keeps
// failing. Nodes the integral curve cannot reach are clamped to its turning
// point (the critical state of the anchor's invariants) instead, which keeps
// the flux-difference windows perturbation-sized.
bool sw_jump_clamped_extension(RhsContext& cx, int i, double* Ust) {
  const auto* sw = dynamic_cast<const ShallowWaterModel*>(cx.model);
  if (!sw) return false;
  const int k = cx.k, nc = cx.nc;
  const int L = 2 * k + 3, anchor = k + 1;
  double Ui[kMaxComp];
  load_state(*cx.U, nc, i, Ui);
  if (!(Ui[0] > 0.0)) return false;
  const double Ha = cx.H[cx.ext(i)];
  const SwInvariants inv = sw_invariants(Ui[0], Ui[1], Ha, sw->g());
  if (inv.C1 == 0.0) return false;  // at rest a missing root means dry, not sonic
  const double hc = std::cbrt(inv.C1 * inv.C1 / sw->g());
  const FlowRegime reg_anchor = sw->classify(Ui);
  for (int l = 0; l < L; ++l) {
    const int e = cx.ext(i - k - 1 + l);
    double* out = Ust + l * nc;
    if (l == anchor || (cx.H[e] == Ha && (cx.regimes[e] == reg_anchor ||
                                          reg_anchor == FlowRegime::Critical))) {
      out[0] = Ui[0];
      out[1] = Ui[1];
      continue;
    }
    FlowRegime want = cx.regimes[e];
    if (want == FlowRegime::Critical) want = reg_anchor;
    const DepthResult dr = depth_from_invariants(inv.C1, inv.C2, cx.H[e], want, sw->g());
    out[0] = dr.ok ? dr.h : hc;
    out[1] = inv.C1;
  }
  return true;
}

// Computes the stationary extension for node i over the window
// [i-k-1, i+k+1]; returns false if no extension exists (fallback).
bool node_extension(RhsContext& cx, WbKind kind, int i, double* Ust /* L*nc */) {
  const int k = cx.k, nc = cx.nc;
  const int L = 2 * k + 3;
  double Ui[kMaxComp];
  load_state(*cx.U, nc, i, Ui);

  double Hw[16];
  FlowRegime regw[16];
  for (int l = 0; l < L; ++l) {
    const int e = cx.ext(i - k - 1 + l);
    Hw[l] = cx.H[e];
    regw[l] = cx.regimes[e];
  }
  const int anchor = k + 1;

  if (kind == WbKind::WaterAtRest)
    return war_extension(Ui[0], anchor, std::span<const double>(Hw, L), Ust) == ExtStatus::Ok;

  bool ok = false;
  if (cx.cfg->extension == ExtensionMode::NumericOde) {
    // The node-to-node ODE march cannot represent bottom jumps inside the
    // window; such stencils go to the closed-form jump treatment below.
    if (!window_crosses_jump(cx, i)) {
      const int K = cx.cfg->ode_substeps > 0 ? cx.cfg->ode_substeps : default_substeps(k);
      double fwd[16 * kMaxComp], bwd[16 * kMaxComp];
      const double xi = cx.grid->x(i);
      ok = extend_forward(*cx.model, cx.bath->Hx, Ui, xi, cx.dx, k + 1, K, fwd) ==
               OdeStatus::Ok &&
           extend_backward(*cx.model, cx.bath->Hx, Ui, xi, cx.dx, k + 1, K, bwd) ==
               OdeStatus::Ok;
      if (ok) {
        for (int c = 0; c < nc; ++c) {
          Ust[anchor * nc + c] = Ui[c];
          for (int gpp = 1; gpp <= k + 1; ++gpp) {
            Ust[(anchor + gpp) * nc + c] = fwd[(gpp - 1) * nc + c];
            Ust[(anchor - gpp) * nc + c] = bwd[(gpp - 1) * nc + c];
          }
        }
      }
    }
  } else {
    ok = cx.model->stationary_extension(Ui, anchor, std::span<const double>(Hw, L),
                                        std::span<const FlowRegime>(regw, L),
                                        Ust) == ExtStatus::Ok;
  }
  if (!ok && window_crosses_jump(cx, i)) ok = sw_jump_clamped_extension(cx, i, Ust);
  return ok;
}

void wb_node_rhs(RhsContext& cx, WbKind kind, int i, StateField& rhs) {
  const int k = cx.k, nc = cx.nc;
  const int L = 2 * k + 3;
  const int W = 2 * k + 1;

  double Ust[16 * kMaxComp];
  if (!node_extension(cx, kind, i, Ust)) {
    standard_node_rhs(cx, i, rhs);
    return;
  }

  // Differenced flux and viscosity windows, local index l <-> node i-k-1+l.
  double dF[kMaxComp][16], dV[kMaxComp][16];
  double Gstar[kMaxComp];
  const auto* sw = dynamic_cast<const ShallowWaterModel*>(cx.model);
  if (kind == WbKind::MassCons) {
    double Ui[kMaxComp];
    load_state(*cx.U, nc, i, Ui);
    sw_viscosity_vector(Ui, cx.H[cx.ext(i)], sw->g(), Gstar);
  }
  double Fst[kMaxComp], Uj[kMaxComp], Gj[kMaxComp];
  for (int l = 0; l < L; ++l) {
    const int j = i - k - 1 + l;
    const int e = cx.ext(j);
    cx.model->flux(Ust + l * nc, Fst);
    load_state(*cx.U, nc, j, Uj);
    for (int c = 0; c < nc; ++c)
      dF[c][l] = cx.F[static_cast<std::size_t>(e) * nc + c] - Fst[c];
    if (kind == WbKind::MassCons) {
      sw_viscosity_vector(Uj, cx.H[e], sw->g(), Gj);
      for (int c = 0; c < nc; ++c) dV[c][l] = Gj[c] - Gstar[c];
    } else {
      for (int c = 0; c < nc; ++c) dV[c][l] = Uj[c] - Ust[l * nc + c];
    }
  }

  // Interface i-1/2 and i+1/2 values of the differenced flux.
  std::array<std::array<double, kMaxComp>, 2> fhat{};  // [0] left, [1] right interface
  switch (cx.cfg->splitting) {
    case Splitting::GlobalLF:
    case Splitting::LocalLF: {
      for (int side = 0; side < 2; ++side) {
        const int m = i + side;  // interface index
        const double a =
            (cx.cfg->splitting == Splitting::GlobalLF) ? cx.alpha : local_alpha(cx, m);
        // R^L window centered at node m-1 = local offset side; R^R window
        // centered at node m = local offset side+1.
        double wp[5], wm[5];
        for (int c = 0; c < nc; ++c) {
          for (int t = 0; t < W; ++t) {
            wp[t] = 0.5 * (dF[c][side + t] + a * dV[c][side + t]);
            wm[t] = 0.5 * (dF[c][side + 1 + t] - a * dV[c][side + 1 + t]);
          }
          fhat[side][c] = reconstruct_left(cx.rc, std::span<const double>(wp, W)) +
                          reconstruct_right(cx.rc, std::span<const double>(wm, W));
        }
      }
      break;
    }
    case Splitting::UpwindProjection: {
      for (int side = 0; side < 2; ++side) {
        const int m = i + side;
        double UL[kMaxComp], UR[kMaxComp], Um[kMaxComp];
        load_state(*cx.U, nc, m - 1, UL);
        load_state(*cx.U, nc, m, UR);
        for (int c = 0; c < nc; ++c) Um[c] = 0.5 * (UL[c] + UR[c]);
        double Pp[4], Pm[4];
        if (!projection_from_state(*cx.model, Um, Pp, Pm))
          throw std::runtime_error("upwind projection: defective eigenstructure");
        double rl[kMaxComp], rr[kMaxComp], win[5];
        for (int c = 0; c < nc; ++c) {
          for (int t = 0; t < W; ++t) win[t] = dF[c][side + t];
          rl[c] = reconstruct_left(cx.rc, std::span<const double>(win, W));
          for (int t = 0; t < W; ++t) win[t] = dF[c][side + 1 + t];
          rr[c] = reconstruct_right(cx.rc, std::span<const double>(win, W));
        }
        double fp[kMaxComp], fm[kMaxComp];
        apply_matrix(nc, Pp, rl, fp);
        apply_matrix(nc, Pm, rr, fm);
        for (int c = 0; c < nc; ++c) fhat[side][c] = fp[c] + fm[c];
      }
      break;
    }
  }

  // Pure flux difference: the nodal residual source vanishes identically
  // because the extension passes through the node's own state (for the
  // water-at-rest extension the source depends on h only, which matches).
  for (int c = 0; c < nc; ++c)
    rhs.at(c, i) = -(fhat[1][c] - fhat[0][c]) / cx.dx;
}

// ---- WBSingle (fixed reference) --------------------------------------------------

void wbsingle_rhs(RhsContext& cx, StateField& rhs) {
  const int k = cx.k, nc = cx.nc, n = cx.n;
  if (!cx.cfg->reference)
    throw std::invalid_argument("WBSingle requires a reference stationary solution");

  // Reference states and fluxes at all extended nodes.
  const int ne = n + 2 * cx.gw;
  std::vector<double> Ust(static_cast<std::size_t>(ne) * nc), Fst(Ust.size());
  double buf[kMaxComp], Fb[kMaxComp];
  for (int i = -cx.gw; i < n + cx.gw; ++i) {
    cx.cfg->reference(cx.grid->x(i), buf);
    cx.model->flux(buf, Fb);
    const int e = cx.ext(i);
    for (int c = 0; c < nc; ++c) {
      Ust[static_cast<std::size_t>(e) * nc + c] = buf[c];
      Fst[static_cast<std::size_t>(e) * nc + c] = Fb[c];
    }
  }

  // Differenced interface fluxes, shared between neighboring nodes so the
  // conservative components telescope bitwise.
  std::vector<double> fhat(static_cast<std::size_t>(n + 1) * nc);
  double winL[5], winR[5];
  for (int m = 0; m <= n; ++m) {
    double* out = fhat.data() + static_cast<std::size_t>(m) * nc;
    switch (cx.cfg->splitting) {
      case Splitting::GlobalLF:
      case Splitting::LocalLF: {
        const double a =
            (cx.cfg->splitting == Splitting::GlobalLF) ? cx.alpha : local_alpha(cx, m);
        for (int c = 0; c < nc; ++c) {
          for (int t = 0; t < 2 * k + 1; ++t) {
            const int jL = m - 1 - k + t, jR = m - k + t;
            const std::size_t eL = static_cast<std::size_t>(cx.ext(jL)) * nc + c;
            const std::size_t eR = static_cast<std::size_t>(cx.ext(jR)) * nc + c;
            winL[t] = 0.5 * ((cx.F[eL] - Fst[eL]) + a * (cx.U->at(c, jL) - Ust[eL]));
            winR[t] = 0.5 * ((cx.F[eR] - Fst[eR]) - a * (cx.U->at(c, jR) - Ust[eR]));
          }
          out[c] = reconstruct_left(cx.rc, std::span<const double>(winL, 2 * k + 1)) +
                   reconstruct_right(cx.rc, std::span<const double>(winR, 2 * k + 1));
        }
        break;
      }
      case Splitting::UpwindProjection: {
        double UL[kMaxComp], UR[kMaxComp], Um[kMaxComp];
        load_state(*cx.U, nc, m - 1, UL);
        load_state(*cx.U, nc, m, UR);
        for (int c = 0; c < nc; ++c) Um[c] = 0.5 * (UL[c] + UR[c]);
        double Pp[4], Pm[4];
        if (!projection_from_state(*cx.model, Um, Pp, Pm))
          throw std::runtime_error("upwind projection: defective eigenstructure");
        double rl[kMaxComp], rr[kMaxComp];
        for (int c = 0; c < nc; ++c) {
          for (int t = 0; t < 2 * k + 1; ++t) {
            const std::size_t eL = static_cast<std::size_t>(cx.ext(m - 1 - k + t)) * nc + c;
            const std::size_t eR = static_cast<std::size_t>(cx.ext(m - k + t)) * nc + c;
            winL[t] = cx.F[eL] - Fst[eL];
            winR[t] = cx.F[eR] - Fst[eR];
          }
          rl[c] = reconstruct_left(cx.rc, std::span<const double>(winL, 2 * k + 1));
          rr[c] = reconstruct_right(cx.rc, std::span<const double>(winR, 2 * k + 1));
        }
        double fp[kMaxComp], fm[kMaxComp];
        apply_matrix(nc, Pp, rl, fp);
        apply_matrix(nc, Pm, rr, fm);
        for (int c = 0; c < nc; ++c) out[c] = fp[c] + fm[c];
        break;
      }
    }
  }

  double Ui[kMaxComp], S[kMaxComp], Sref[kMaxComp];
  for (int i = 0; i < n; ++i) {
    const double* fl = fhat.data() + static_cast<std::size_t>(i) * nc;
    const double* fr = fhat.data() + static_cast<std::size_t>(i + 1) * nc;
    load_state(*cx.U, nc, i, Ui);
    cx.model->source(Ui, S);
    cx.model->source(Ust.data() + static_cast<std::size_t>(cx.ext(i)) * nc, Sref);
    const double hx = cx.Hx[cx.ext(i)];
    for (int c = 0; c < nc; ++c)
      rhs.at(c, i) = -(fr[c] - fl[c]) / cx.dx + (S[c] - Sref[c]) * hx;
  }
  for (int m : cx.jumps) {
    add_jump_correction(cx, m, m - 1, rhs, &Ust);
    add_jump_correction(cx, m, m, rhs, &Ust);
  }
}

}  // namespace

void compute_rhs(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
                 const Grid& grid, const StateField& U, StateField& rhs) {
  if (cfg.order != 3 && cfg.order != 5)
    throw std::invalid_argument("compute_rhs: order must be 3 or 5");
  if (rhs.n_comp() != model.n_comp() || rhs.n_interior() != grid.n)
    throw std::invalid_argument("compute_rhs: rhs shape mismatch");
  const bool needs_sw = cfg.family == SchemeFamily::WBWaterAtRest ||
                        cfg.family == SchemeFamily::WBMassCons;
  if (needs_sw && !dynamic_cast<const ShallowWaterModel*>(&model))
    throw std::invalid_argument("scheme family requires the shallow water model");

  RhsContext cx = make_context(cfg, model, bath, grid, U);

  switch (cfg.family) {
    case SchemeFamily::Standard:
      for (int i = 0; i < cx.n; ++i) standard_node_rhs(cx, i, rhs);
      break;
    case SchemeFamily::WBSingle:
      wbsingle_rhs(cx, rhs);
      break;
    case SchemeFamily::WBFull:
      for (int i = 0; i < cx.n; ++i) wb_node_rhs(cx, WbKind::Full, i, rhs);
      break;
    case SchemeFamily::WBWaterAtRest:
      for (int i = 0; i < cx.n; ++i) wb_node_rhs(cx, WbKind::WaterAtRest, i, rhs);
      break;
    case SchemeFamily::WBMassCons:
      for (int i = 0; i < cx.n; ++i) wb_node_rhs(cx, WbKind::MassCons, i, rhs);
      break;
  }
}

bool projection_pair(const Model& model, const double* UL, const double* UR, double* Pp,
                     double* Pm) {
  double Um[kMaxComp];
  for (int c = 0; c < model.n_comp(); ++c) Um[c] = 0.5 * (UL[c] + UR[c]);
  return projection_from_state(model, Um, Pp, Pm);
}

void singular_source_rhs(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
                         const Grid& grid, const StateField& U, StateField& add) {
  RhsContext cx = make_context(cfg, model, bath, grid, U);
  for (int m : cx.jumps) {
    add_jump_correction(cx, m, m - 1, add, nullptr);
    add_jump_correction(cx, m, m, add, nullptr);
  }
}

}  // namespace balsa
