#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3stab/errors.hpp"

namespace k3stab {

enum class TilingMode { Halfplane, Disk };

struct RenderSpec {
  TilingMode mode = TilingMode::Halfplane;
  double q = 1.0;
  int depth = 3;   // triangle translates each way, 1..64
  int size = 800;  // pixel width of the emitted figure
  bool chords = false;  // disk mode: straight chords instead of geodesics
};

// Orbit of 0 under z -> qz + 1: (q^k - 1)/(q - 1), equal to k at q = 1.
// Accumulates at 1/(1-q) as k -> -inf for q > 1 (+inf for q < 1).
double orbit_vertex(double q, std::int64_t k);

// Ideal triangle with vertices (x0, x1, infinity).
struct IdealTriangle {
  double x0 = 0.0;
  double x1 = 0.0;
};

struct TilingGeometry {
  std::vector<IdealTriangle> triangles;  // 2*depth + 1, indexed -depth..depth
  bool has_blue = false;
  double blue_abscissa = 0.0;  // fixed point 1/(1-q) when q != 1
};

// Triangle k has vertices (orbit_vertex(k), orbit_vertex(k+1), inf).
TilingGeometry tiling_geometry(double q, int depth);

// Deterministic SVG bytes; numbers in shortest round-trip form.  Halfplane
// mode draws geodesic semicircles and vertical rays over the vertex
// abscissas; disk mode post-composes with z -> (z-i)/(z+i), marks the red
// point (image of infinity) and, at q != 1, the blue point and the
// boundary interval between them.
std::string render_svg(const RenderSpec& spec);

}  // namespace k3stab
