// Bottom-profile catalog: smooth profiles plus profiles with isolated jumps.
// Jumps are described explicitly so schemes can pin them to intercells and
// apply singular source corrections.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace balsa {

struct Bathymetry {
  std::string name;
  std::function<double(double)> H;
  std::function<double(double)> Hx;  // one-sided limits at jump points

  struct Jump {
    double x;
    double H_left;
    double H_right;
  };
  std::vector<Jump> jumps;

  bool smooth() const { return jumps.empty(); }
};

// Catalog lookup by name. Known profiles:
//   identity        H(x) = x
//   oscillatory     H(x) = x + 0.1 sin(100 x)
//   burgers-jump    H(x) = 0.1 x for x <= 0, 0.9 + x for x > 0 (jump at 0)
//   bump            H(x) = -0.25 (1 + cos(5 pi x)) on [-0.2, 0.2], else 0
//   sw-jump         cosine dip on [-1.4, -1], 0 on (-1, 0], 1 for x > 0
//   parabolic-hump  H(x) = 0.13 + 0.05 (x - 10)^2 on [8, 12], else 0.33
//   flat            H(x) = 0
Bathymetry make_bathymetry(const std::string& name);

std::vector<std::string> bathymetry_names();

}  // namespace balsa
