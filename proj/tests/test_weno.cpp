#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "balsa/weno.hpp"
#include "oracles.hpp"

using namespace balsa;

namespace {

ReconstructionConfig cfg_of(int k, WeightMode mode) {
  ReconstructionConfig c;
  c.k = k;
  c.mode = mode;
  return c;
}

double scale_of(std::span<const double> w) {
  double s = 1.0;
  for (double v : w) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Linear mode against the frozen interpolation oracle
// ---------------------------------------------------------------------------

TEST_CASE("linear-mode left reconstruction matches the primitive-interpolation oracle") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int k : {1, 2}) {
    const auto cfg = cfg_of(k, WeightMode::Linear);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> w(2 * k + 1);
      for (auto& v : w) v = dist(rng);
      const double expected = oracles::interface_value_full(w);
      const double got = reconstruct_left(cfg, w);
      CHECK(got == doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("right reconstruction is the left reconstruction of the reversed window") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int k : {1, 2}) {
    for (WeightMode mode : {WeightMode::Linear, WeightMode::Nonlinear}) {
      const auto cfg = cfg_of(k, mode);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> w(2 * k + 1);
        for (auto& v : w) v = dist(rng);
        std::vector<double> rev(w.rbegin(), w.rend());
        // Bitwise: the mirror symmetry must be exact, not just approximate.
        CHECK(reconstruct_right(cfg, w) == reconstruct_left(cfg, rev));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Nonlinear weights
// ---------------------------------------------------------------------------

TEST_CASE("nonlinear value recombines the frozen candidate and indicator oracles") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double eps = 1e-6;
  for (int k : {1, 2}) {
    const std::vector<double> d =
        k == 1 ? std::vector<double>{2.0 / 3.0, 1.0 / 3.0}
               : std::vector<double>{3.0 / 10.0, 3.0 / 5.0, 1.0 / 10.0};
    const auto cfg = cfg_of(k, WeightMode::Nonlinear);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> w(2 * k + 1);
      for (auto& v : w) v = dist(rng);
      double num = 0.0, den = 0.0;
      for (int r = 0; r <= k; ++r) {
        const double beta = oracles::beta_indicator(w, k, r);
        const double alpha = d[r] / ((eps + beta) * (eps + beta));
        num += alpha * oracles::substencil_value(w, k, r);
        den += alpha;
      }
      CHECK(reconstruct_left(cfg, w) ==
            doctest::Approx(num / den).epsilon(1e-12));
    }
  }
}

TEST_CASE("a jump in an outer cell barely moves the reconstruction") {
  // Smooth quadratic window; then corrupt the cell farthest from the
  // interface. The nonlinear weights must suppress the corrupted stencil.
  for (int k : {1, 2}) {
    const auto nl = cfg_of(k, WeightMode::Nonlinear);
    const auto lin = cfg_of(k, WeightMode::Linear);
    std::vector<double> w(2 * k + 1);
    for (int j = 0; j < 2 * k + 1; ++j) {
      const double x = j - k;
      w[j] = 1.0 + 0.3 * x + 0.05 * x * x;
    }
    const double clean = reconstruct_left(nl, w);
    std::vector<double> dirty = w;
    dirty[0] += 100.0;
    const double guarded = reconstruct_left(nl, dirty);
    const double naive = reconstruct_left(lin, dirty);
    CHECK(std::abs(guarded - clean) < 0.05);
    CHECK(std::abs(naive - clean) > 1.0);
  }
}

// ---------------------------------------------------------------------------
// Shift property (key conservation identity)
// ---------------------------------------------------------------------------

TEST_CASE("reconstruction of a shifted window shifts by exactly the constant") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int k : {1, 2}) {
    for (WeightMode mode : {WeightMode::Linear, WeightMode::Nonlinear}) {
      const auto cfg = cfg_of(k, mode);
      for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> w(2 * k + 1);
        for (auto& v : w) v = dist(rng);
        const double V = shift(rng);
        std::vector<double> shifted = w;
        for (auto& v : shifted) v -= V;
        const double lhs = reconstruct_left(cfg, shifted);
        const double rhs = reconstruct_left(cfg, w) - V;
        const double tol = 1e-13 * std::max(scale_of(w), std::abs(V));
        CHECK(std::abs(lhs - rhs) <= tol);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Accuracy sweep
// ---------------------------------------------------------------------------

TEST_CASE("conservative differences converge at order 2k+1 on smooth data") {
  // Individual interface values are only O(dx^2) approximations of point
  // values; the design property is that (R_{i+1/2} - R_{i-1/2})/dx
  // approximates f'(x_i) at order 2k+1.
  auto f = [](double x) { return std::sin(1.3 * x) + 0.4 * std::cos(2.1 * x); };
  auto fp = [](double x) { return 1.3 * std::cos(1.3 * x) - 0.84 * std::sin(2.1 * x); };
  for (int k : {1, 2}) {
    const auto cfg = cfg_of(k, WeightMode::Linear);
    double prev_err = 0.0;
    for (int level = 0; level < 2; ++level) {
      const double dx = (level == 0) ? 0.02 : 0.01;
      double max_err = 0.0;
      for (int s = 0; s < 50; ++s) {
        const double xi = -1.0 + 0.04 * s;
        std::vector<double> right(2 * k + 1), left(2 * k + 1);
        for (int j = 0; j < 2 * k + 1; ++j) {
          right[j] = f(xi + (j - k) * dx);        // window centered at node i
          left[j] = f(xi + (j - k - 1) * dx);     // window centered at node i-1
        }
        const double deriv =
            (reconstruct_left(cfg, right) - reconstruct_left(cfg, left)) / dx;
        max_err = std::max(max_err, std::abs(deriv - fp(xi)));
      }
      if (level == 1) {
        const double ratio = prev_err / max_err;
        CHECK(ratio > std::pow(2.0, 2 * k + 0.7));
      }
      prev_err = max_err;
    }
  }
}

TEST_CASE("window_size maps order parameter to stencil width") {
  CHECK(window_size(1) == 3);
  CHECK(window_size(2) == 5);
}
