#include "balsa/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace balsa {

Grid make_grid(double x_lo, double x_hi, int n) {
  if (!(x_hi > x_lo)) throw std::invalid_argument("make_grid: x_hi must exceed x_lo");
  if (n < 1) throw std::invalid_argument("make_grid: need at least one cell");
  return Grid{x_lo, x_hi, n};
}

StateField::StateField(int n_comp, int n_interior, int ghost)
    : n_comp_(n_comp), n_(n_interior), ghost_(ghost) {
  if (n_comp < 1 || n_comp > kMaxFieldComp)
    throw std::invalid_argument("StateField: unsupported component count");
  if (n_interior < 1 || ghost < 0) throw std::invalid_argument("StateField: bad sizes");
  stride_ = static_cast<std::size_t>(n_) + 2 * static_cast<std::size_t>(ghost_);
  data_.assign(static_cast<std::size_t>(n_comp_) * stride_, 0.0);
}

bool StateField::finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

void fill_ghosts(StateField& f, const Grid& g, const BoundarySpec& bc) {
  const int nc = f.n_comp();
  const int n = f.n_interior();
  const int gw = f.ghost();
  double buf[kMaxFieldComp];
  auto fill_side = [&](const BoundarySide& side, bool left) {
    for (int m = 1; m <= gw; ++m) {
      const int i = left ? -m : n - 1 + m;
      switch (side.kind) {
        case BoundaryKind::Free: {
          const int src = left ? 0 : n - 1;
          for (int c = 0; c < nc; ++c) f.at(c, i) = f.at(c, src);
          break;
        }
        case BoundaryKind::FixedStationary: {
          if (!side.sampler) throw std::invalid_argument("fill_ghosts: missing sampler");
          side.sampler(g.x(i), buf);
          for (int c = 0; c < nc; ++c) f.at(c, i) = buf[c];
          break;
        }
        case BoundaryKind::FixedValue: {
          if (static_cast<int>(side.value.size()) != nc)
            throw std::invalid_argument("fill_ghosts: FixedValue size mismatch");
          for (int c = 0; c < nc; ++c) f.at(c, i) = side.value[c];
          break;
        }
      }
    }
  };
  fill_side(bc.left, true);
  fill_side(bc.right, false);
}

StateField ghost_extend(const StateField& interior, const Grid& g, const BoundarySpec& bc,
                        int width) {
  StateField out(interior.n_comp(), interior.n_interior(), width);
  for (int c = 0; c < interior.n_comp(); ++c)
    for (int i = 0; i < interior.n_interior(); ++i) out.at(c, i) = interior.at(c, i);
  fill_ghosts(out, g, bc);
  return out;
}

double l1_error(const StateField& a, const StateField& b, double dx) {
  if (a.n_comp() != b.n_comp() || a.n_interior() != b.n_interior())
    throw std::invalid_argument("l1_error: shape mismatch");
  double s = 0.0;
  for (int c = 0; c < a.n_comp(); ++c)
    for (int i = 0; i < a.n_interior(); ++i) s += std::abs(a.at(c, i) - b.at(c, i));
  return dx * s;
}

double l1_error_component(const StateField& a, const StateField& b, double dx, int comp) {
  if (a.n_interior() != b.n_interior()) throw std::invalid_argument("l1_error: shape mismatch");
  double s = 0.0;
  for (int i = 0; i < a.n_interior(); ++i) s += std::abs(a.at(comp, i) - b.at(comp, i));
  return dx * s;
}

double convergence_order(double e_coarse, double e_fine) {
  return std::log2(e_coarse / e_fine);
}

double mass(const StateField& f, double dx, int comp) {
  double s = 0.0;
  for (int i = 0; i < f.n_interior(); ++i) s += f.at(comp, i);
  return dx * s;
}

}  // namespace balsa
