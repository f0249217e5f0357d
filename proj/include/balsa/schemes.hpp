// Semi-discrete right-hand sides: the standard finite-difference WENO scheme
// and the four well-balanced variants (full stationary extension, single
// fixed reference, water-at-rest extension, mass-conserving viscosity).
#pragma once

#include <functional>

#include "balsa/bathymetry.hpp"
#include "balsa/grid.hpp"
#include "balsa/models.hpp"
#include "balsa/weno.hpp"

namespace balsa {

enum class SchemeFamily {
  Standard,        // nodal source, conservative flux difference
  WBFull,          // per-node stationary extension of the data
  WBSingle,        // one fixed reference stationary solution
  WBWaterAtRest,   // water-at-rest extension (shallow water)
  WBMassCons       // mass-conserving viscosity vector (shallow water)
};

enum class Splitting { GlobalLF, LocalLF, UpwindProjection };
enum class SingularSourceMode { Centered, Upwinded };
enum class ExtensionMode { ClosedForm, NumericOde };

struct SchemeConfig {
  SchemeFamily family = SchemeFamily::Standard;
  int order = 3;  // 3 or 5
  WeightMode weights = WeightMode::Nonlinear;
  Splitting splitting = Splitting::GlobalLF;
  SingularSourceMode singular = SingularSourceMode::Centered;
  ExtensionMode extension = ExtensionMode::ClosedForm;
  int ode_substeps = 0;  // 0 -> default_substeps(k)
  double eps = 1e-6;
  // Fixed reference stationary solution (required by WBSingle).
  std::function<void(double x, double* U)> reference;

  int k() const { return order == 3 ? 1 : 2; }
};

// Ghost nodes required per side: k + 1.
int ghost_width(const SchemeConfig& cfg);

// Assemble the semi-discrete RHS dU/dt at the interior nodes of `U` (whose
// ghosts must already be filled). `rhs` needs no ghosts.
void compute_rhs(const SchemeConfig& cfg, const Model& model, const Bathymetry& bath,
                 const Grid& grid, const StateField& U, StateField& rhs);

// Sign-projection pair for the interface between states UL and UR: the flux
// Jacobian at the arithmetic-mean state is eigen-decomposed as K D K^{-1},
// and Pp/Pm = K diag((1 +/- sign(lambda))/2) K^{-1}, so Pp + Pm = I and a
// zero eigenvalue contributes half to each. Row-major n x n. Returns false
// on defective or complex eigenstructure.
bool projection_pair(const Model& model, const double* UL, const double* UR,
                     double* Pp, double* Pm);

// Dirac corrections from bottom jumps (pinned at intercells) for the standard
// scheme: adds P^{-} S_mid dH/dx at the node left of each jump and
// P^{+} S_mid dH/dx at the node right of it, with dH the nodal difference and
// S_mid per `cfg.singular`. Exposed for testing; compute_rhs applies it
// internally for the families that need it.
void singular_source_rhs(const SchemeConfig& cfg, const Model& model,
                         const Bathymetry& bath, const Grid& grid, const StateField& U,
                         StateField& add);

}  // namespace balsa
