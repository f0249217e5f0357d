// Uniform 1D cell-centered grid, multi-component node fields with ghost
// extension, and the error/convergence helpers used by the benchmarks.
#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <vector>

namespace balsa {

// Upper bound on components a StateField can hold (fixed-size sampler buffers).
inline constexpr int kMaxFieldComp = 4;

// Cell-centered uniform mesh on [x_lo, x_hi]: node i sits at x_lo + (i+1/2) dx.
// Negative indices and indices >= n address ghost nodes.
struct Grid {
  double x_lo = 0.0;
  double x_hi = 1.0;
  int n = 0;

  double dx() const { return (x_hi - x_lo) / n; }
  double x(int i) const { return x_lo + (static_cast<double>(i) + 0.5) * dx(); }
  // Interface m lies between nodes m-1 and m (m in [0, n] for the interior).
  double interface_x(int m) const { return x_lo + static_cast<double>(m) * dx(); }
};

Grid make_grid(double x_lo, double x_hi, int n);

// Node-indexed storage for n_comp components with `ghost` extra nodes per
// side. Component-major layout; node index runs over [-ghost, n + ghost).
class StateField {
 public:
  StateField() = default;
  StateField(int n_comp, int n_interior, int ghost);

  int n_comp() const { return n_comp_; }
  int n_interior() const { return n_; }
  int ghost() const { return ghost_; }

  double& at(int c, int i) {
    assert(c >= 0 && c < n_comp_ && i >= -ghost_ && i < n_ + ghost_);
    return data_[static_cast<std::size_t>(c) * stride_ + static_cast<std::size_t>(i + ghost_)];
  }
  double at(int c, int i) const {
    assert(c >= 0 && c < n_comp_ && i >= -ghost_ && i < n_ + ghost_);
    return data_[static_cast<std::size_t>(c) * stride_ + static_cast<std::size_t>(i + ghost_)];
  }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
  bool finite() const;

 private:
  int n_comp_ = 0;
  int n_ = 0;
  int ghost_ = 0;
  std::size_t stride_ = 0;
  std::vector<double> data_;
};

// Boundary treatment per side. Free extrapolates the outermost interior node;
// FixedStationary samples a prescribed profile at the ghost coordinates;
// FixedValue pins a constant state.
enum class BoundaryKind { Free, FixedStationary, FixedValue };

struct BoundarySide {
  BoundaryKind kind = BoundaryKind::Free;
  std::function<void(double x, double* U)> sampler;  // FixedStationary
  std::vector<double> value;                         // FixedValue
};

struct BoundarySpec {
  BoundarySide left;
  BoundarySide right;
};

// Fill the ghost nodes of `f` in place according to `bc`.
void fill_ghosts(StateField& f, const Grid& g, const BoundarySpec& bc);

// Return a copy of `interior` re-allocated with `width` ghost nodes per side
// and ghosts filled per `bc`; interior values are untouched.
StateField ghost_extend(const StateField& interior, const Grid& g, const BoundarySpec& bc,
                        int width);

// dx * sum over interior nodes and components of |a - b|.
double l1_error(const StateField& a, const StateField& b, double dx);
// Same restricted to one component.
double l1_error_component(const StateField& a, const StateField& b, double dx, int comp);

// Observed order under mesh halving.
double convergence_order(double e_coarse, double e_fine);

// dx * sum over interior nodes of component `comp` (total mass).
double mass(const StateField& f, double dx, int comp);

}  // namespace balsa
