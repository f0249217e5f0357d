// Model layer: flux, source, eigenstructure and stationary-solution machinery
// for the three balance laws solved by the library (linear advection with
// exponential equilibria, Burgers with the same equilibrium family, and the
// shallow water system over a bottom profile).
#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace balsa {

inline constexpr int kMaxComp = 2;

// Flow classification; for scalar models only Sub is used. The same enum
// doubles as the root-branch request for the shallow-water depth solver.
enum class FlowRegime { Sub, Super, Critical };

// |Fr - 1| at or below this counts as critical (wildcard in stencil rules).
inline constexpr double kCriticalFroudeTol = 1e-8;

enum class ExtStatus { Ok, NoStationary };

class Model {
 public:
  virtual ~Model() = default;
  virtual std::string name() const = 0;
  virtual int n_comp() const = 0;
  virtual void flux(const double* U, double* F) const = 0;
  // S(U): the factor multiplying H_x in the source term.
  virtual void source(const double* U, double* S) const = 0;
  virtual void eigenvalues(const double* U, double* lam) const = 0;
  virtual void flux_jacobian(const double* U, double* J) const = 0;  // row-major
  virtual bool admissible(const double* U) const;
  // Indices of components whose source vanishes identically (exact
  // conservation expected from conservative-form schemes).
  virtual std::vector<int> conserved_components() const = 0;
  virtual FlowRegime classify(const double* U) const;
  double max_abs_eigenvalue(const double* U) const;

  // Closed-form stationary extension: the stationary solution through state
  // U_anchor at bottom value Hs[anchor], evaluated at bottom values Hs[j].
  // `regimes` classifies the field data at the window nodes (shallow water
  // uses it to select root branches; scalar models ignore it). Writes
  // Hs.size() states node-major into `out`; out[anchor] == U_anchor exactly.
  virtual ExtStatus stationary_extension(const double* U_anchor, int anchor,
                                         std::span<const double> Hs,
                                         std::span<const FlowRegime> regimes,
                                         double* out) const = 0;
};

// u_t + u_x = u H_x; stationary family u = C e^{H}.
class LinearModel final : public Model {
 public:
  std::string name() const override { return "linear"; }
  int n_comp() const override { return 1; }
  void flux(const double* U, double* F) const override;
  void source(const double* U, double* S) const override;
  void eigenvalues(const double* U, double* lam) const override;
  void flux_jacobian(const double* U, double* J) const override;
  std::vector<int> conserved_components() const override { return {}; }
  ExtStatus stationary_extension(const double* U_anchor, int anchor,
                                 std::span<const double> Hs,
                                 std::span<const FlowRegime> regimes,
                                 double* out) const override;
};

// u_t + (u^2/2)_x = u^2 H_x; stationary family u = C e^{H}.
class BurgersModel final : public Model {
 public:
  std::string name() const override { return "burgers"; }
  int n_comp() const override { return 1; }
  void flux(const double* U, double* F) const override;
  void source(const double* U, double* S) const override;
  void eigenvalues(const double* U, double* lam) const override;
  void flux_jacobian(const double* U, double* J) const override;
  std::vector<int> conserved_components() const override { return {}; }
  ExtStatus stationary_extension(const double* U_anchor, int anchor,
                                 std::span<const double> Hs,
                                 std::span<const FlowRegime> regimes,
                                 double* out) const override;
};

// Shallow water: U = (h, q), F = (q, q^2/h + g h^2/2), S = (0, g h).
class ShallowWaterModel final : public Model {
 public:
  explicit ShallowWaterModel(double g = 9.81) : g_(g) {}
  double g() const { return g_; }
  std::string name() const override { return "sw"; }
  int n_comp() const override { return 2; }
  void flux(const double* U, double* F) const override;
  void source(const double* U, double* S) const override;
  void eigenvalues(const double* U, double* lam) const override;
  void flux_jacobian(const double* U, double* J) const override;
  bool admissible(const double* U) const override;
  std::vector<int> conserved_components() const override { return {0}; }
  FlowRegime classify(const double* U) const override;
  ExtStatus stationary_extension(const double* U_anchor, int anchor,
                                 std::span<const double> Hs,
                                 std::span<const FlowRegime> regimes,
                                 double* out) const override;

 private:
  double g_;
};

std::unique_ptr<Model> make_model(const std::string& name, double g);

// ---- shallow-water stationary algebra --------------------------------------

struct SwInvariants {
  double C1;  // discharge q
  double C2;  // q^2/(2 h^2) + g h - g H
};

SwInvariants sw_invariants(double h, double q, double H, double g);

// Froude number |u| / sqrt(g h).
double froude(double h, double q, double g);

struct DepthResult {
  bool ok = false;
  double h = 0.0;
};

// Positive root of P(h) = h^3 - (C2/g + H) h^2 + C1^2/(2 g) on the requested
// branch. A numerically double root at h_c = (C1^2/g)^{1/3} satisfies any
// requested branch. Safeguarded Newton within the analytic bracket.
DepthResult depth_from_invariants(double C1, double C2, double H, FlowRegime want, double g);

// Water-at-rest extension through (h_anchor, q_anchor) at bottom Hs[anchor]:
// h*_j = h_anchor + (Hs[j] - Hs[anchor]), q* = 0. Fails if any h* <= 0.
ExtStatus war_extension(double h_anchor, int anchor, std::span<const double> Hs, double* out);

// Viscosity vector for the mass-conserving scheme: G = (h - H + u^2/(2g), q).
// On a stationary solution G = (C2/g, C1), constant in x.
void sw_viscosity_vector(const double* U, double H, double g, double* G);

}  // namespace balsa
