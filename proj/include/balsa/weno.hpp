// WENO interface reconstructions of orders 3 and 5 (k = 1, 2) in the
// finite-difference setting: a (2k+1)-wide window of nodal values produces
// the upwind-biased interface value at the right edge of the center node.
#pragma once

#include <span>

namespace balsa {

enum class WeightMode { Nonlinear, Linear };

struct ReconstructionConfig {
  int k = 1;  // 1 -> third order, 2 -> fifth order
  WeightMode mode = WeightMode::Nonlinear;
  double eps = 1e-6;
};

// Window w = (w_{i-k}, ..., w_{i+k}), size 2k+1; returns the left-biased
// reconstruction at interface i+1/2.
double reconstruct_left(const ReconstructionConfig& cfg, std::span<const double> w);

// Right-biased reconstruction at interface i-1/2 from the same window shape;
// implemented exactly as reconstruct_left on the reversed window so the
// mirror symmetry holds bit for bit.
double reconstruct_right(const ReconstructionConfig& cfg, std::span<const double> w);

// Window width for a given k.
constexpr int window_size(int k) { return 2 * k + 1; }

}  // namespace balsa
