#include "balsa/weno.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace balsa {

namespace {

// Third order, k = 1: window (w0, w1, w2) = (w_{i-1}, w_i, w_{i+1}).
double left3(const ReconstructionConfig& cfg, const double* w) {
  const double p0 = 0.5 * w[1] + 0.5 * w[2];
  const double p1 = -0.5 * w[0] + 1.5 * w[1];
  if (cfg.mode == WeightMode::Linear) return (2.0 / 3.0) * p0 + (1.0 / 3.0) * p1;
  const double b0 = (w[2] - w[1]) * (w[2] - w[1]);
  const double b1 = (w[1] - w[0]) * (w[1] - w[0]);
  const double a0 = (2.0 / 3.0) / ((cfg.eps + b0) * (cfg.eps + b0));
  const double a1 = (1.0 / 3.0) / ((cfg.eps + b1) * (cfg.eps + b1));
  return (a0 * p0 + a1 * p1) / (a0 + a1);
}

// Fifth order, k = 2: window (w0..w4) = (w_{i-2}, ..., w_{i+2}).
double left5(const ReconstructionConfig& cfg, const double* w) {
  const double p0 = (1.0 / 3.0) * w[2] + (5.0 / 6.0) * w[3] - (1.0 / 6.0) * w[4];
  const double p1 = -(1.0 / 6.0) * w[1] + (5.0 / 6.0) * w[2] + (1.0 / 3.0) * w[3];
  const double p2 = (1.0 / 3.0) * w[0] - (7.0 / 6.0) * w[1] + (11.0 / 6.0) * w[2];
  if (cfg.mode == WeightMode::Linear)
    return 0.3 * p0 + 0.6 * p1 + 0.1 * p2;
  const double c = 13.0 / 12.0;
  const double d0 = w[2] - 2.0 * w[3] + w[4];
  const double d1 = w[1] - 2.0 * w[2] + w[3];
  const double d2 = w[0] - 2.0 * w[1] + w[2];
  const double b0 = c * d0 * d0 + 0.25 * (3.0 * w[2] - 4.0 * w[3] + w[4]) * (3.0 * w[2] - 4.0 * w[3] + w[4]);
  const double b1 = c * d1 * d1 + 0.25 * (w[1] - w[3]) * (w[1] - w[3]);
  const double b2 = c * d2 * d2 + 0.25 * (w[0] - 4.0 * w[1] + 3.0 * w[2]) * (w[0] - 4.0 * w[1] + 3.0 * w[2]);
  const double a0 = 0.3 / ((cfg.eps + b0) * (cfg.eps + b0));
  const double a1 = 0.6 / ((cfg.eps + b1) * (cfg.eps + b1));
  const double a2 = 0.1 / ((cfg.eps + b2) * (cfg.eps + b2));
  return (a0 * p0 + a1 * p1 + a2 * p2) / (a0 + a1 + a2);
}

}  // namespace

double reconstruct_left(const ReconstructionConfig& cfg, std::span<const double> w) {
  if (static_cast<int>(w.size()) != window_size(cfg.k))
    throw std::invalid_argument("reconstruct_left: window size mismatch");
  if (cfg.k == 1) return left3(cfg, w.data());
  if (cfg.k == 2) return left5(cfg, w.data());
  throw std::invalid_argument("reconstruct_left: k must be 1 or 2");
}

double reconstruct_right(const ReconstructionConfig& cfg, std::span<const double> w) {
  if (static_cast<int>(w.size()) != window_size(cfg.k))
    throw std::invalid_argument("reconstruct_right: window size mismatch");
  std::array<double, 5> rev{};
  const int m = static_cast<int>(w.size());
  for (int j = 0; j < m; ++j) rev[j] = w[m - 1 - j];
  return reconstruct_left(cfg, std::span<const double>(rev.data(), w.size()));
}

}  // namespace balsa
