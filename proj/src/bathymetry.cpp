#include "balsa/bathymetry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace balsa {

namespace {

constexpr double kPi = std::numbers::pi;

Bathymetry identity() {
  Bathymetry b;
  b.name = "identity";
  b.H = [](double x) { return x; };
  b.Hx = [](double) { return 1.0; };
  return b;
}

Bathymetry oscillatory() {
  Bathymetry b;
  b.name = "oscillatory";
  b.H = [](double x) { return x + 0.1 * std::sin(100.0 * x); };
  b.Hx = [](double x) { return 1.0 + 10.0 * std::cos(100.0 * x); };
  return b;
}

Bathymetry burgers_jump() {
  Bathymetry b;
  b.name = "burgers-jump";
  b.H = [](double x) { return x <= 0.0 ? 0.1 * x : 0.9 + x; };
  b.Hx = [](double x) { return x <= 0.0 ? 0.1 : 1.0; };
  b.jumps.push_back({0.0, 0.0, 0.9});
  return b;
}

Bathymetry bump() {
  Bathymetry b;
  b.name = "bump";
  b.H = [](double x) {
    return std::abs(x) <= 0.2 ? -0.25 * (1.0 + std::cos(5.0 * kPi * x)) : 0.0;
  };
  b.Hx = [](double x) {
    return std::abs(x) <= 0.2 ? 1.25 * kPi * std::sin(5.0 * kPi * x) : 0.0;
  };
  return b;
}

Bathymetry sw_jump() {
  Bathymetry b;
  b.name = "sw-jump";
  b.H = [](double x) {
    if (x >= -1.4 && x <= -1.0) return -0.25 * (1.0 + std::cos(5.0 * kPi * (x + 1.2)));
    if (x > 0.0) return 1.0;
    return 0.0;
  };
  b.Hx = [](double x) {
    if (x > -1.4 && x < -1.0) return 1.25 * kPi * std::sin(5.0 * kPi * (x + 1.2));
    return 0.0;
  };
  b.jumps.push_back({0.0, 0.0, 1.0});
  return b;
}

Bathymetry parabolic_hump() {
  Bathymetry b;
  b.name = "parabolic-hump";
  b.H = [](double x) {
    return (x >= 8.0 && x <= 12.0) ? 0.13 + 0.05 * (x - 10.0) * (x - 10.0) : 0.33;
  };
  b.Hx = [](double x) { return (x > 8.0 && x < 12.0) ? 0.1 * (x - 10.0) : 0.0; };
  return b;
}

Bathymetry flat() {
  Bathymetry b;
  b.name = "flat";
  b.H = [](double) { return 0.0; };
  b.Hx = [](double) { return 0.0; };
  return b;
}

}  // namespace

Bathymetry make_bathymetry(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "oscillatory") return oscillatory();
  if (name == "burgers-jump") return burgers_jump();
  if (name == "bump") return bump();
  if (name == "sw-jump") return sw_jump();
  if (name == "parabolic-hump") return parabolic_hump();
  if (name == "flat") return flat();
  throw std::invalid_argument("unknown bathymetry: " + name);
}

std::vector<std::string> bathymetry_names() {
  return {"identity", "oscillatory", "burgers-jump", "bump", "sw-jump", "parabolic-hump", "flat"};
}

}  // namespace balsa
