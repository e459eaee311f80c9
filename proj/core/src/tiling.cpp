#include "k3stab/tiling.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <complex>

namespace k3stab {

namespace {

void require_spec(double q, int depth) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError("tiling weight q must be positive and finite");
  }
  if (depth < 1 || depth > 64) {
    throw DomainError("tiling depth must lie in [1, 64]");
  }
}

std::string fmt(double x) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Cayley transform of a real abscissa onto the unit circle.
Vec2 cayley(double v) {
  const std::complex<double> w =
      (std::complex<double>(v, -1.0)) / (std::complex<double>(v, 1.0));
  return {w.real(), w.imag()};
}

constexpr Vec2 kRed{1.0, 0.0};  // Cayley image of infinity

class Svg {
 public:
  Svg(double width, double height) {
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    body_ += fmt(width);
    body_ += "\" height=\"";
    body_ += fmt(height);
    body_ += "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  }

  void path(const std::string& d, const char* stroke, double width) {
    body_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"";
    body_ += stroke;
    body_ += "\" stroke-width=\"" + fmt(width) + "\"/>\n";
  }

  void line(Vec2 a, Vec2 b, const char* stroke, double width) {
    path("M" + fmt(a.x) + " " + fmt(a.y) + " L" + fmt(b.x) + " " + fmt(b.y),
         stroke, width);
  }

  void circle(Vec2 c, double r, const char* fill) {
    body_ += "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
             "\" r=\"" + fmt(r) + "\" fill=\"";
    body_ += fill;
    body_ += "\"/>\n";
  }

  std::string finish() {
    body_ += "</svg>\n";
    return std::move(body_);
  }

 private:
  std::string body_;
};

// Maps world coordinates (y up) to screen coordinates (y down).
struct Frame {
  double scale = 1.0;
  double x0 = 0.0;  // world x at screen x = 0
  double y1 = 0.0;  // world y at screen y = 0

  Vec2 to_screen(Vec2 w) const {
    return {(w.x - x0) * scale, (y1 - w.y) * scale};
  }
};

std::string arc_path(const Frame& fr, Vec2 a, Vec2 b, double r,
                     int sweep_math_ccw) {
  // The frame flips y, so an arc that is CCW in world coordinates runs in
  // the decreasing-angle direction of the SVG frame: sweep flag 0.
  const Vec2 sa = fr.to_screen(a);
  const Vec2 sb = fr.to_screen(b);
  const int sweep = sweep_math_ccw ? 0 : 1;
  return "M" + fmt(sa.x) + " " + fmt(sa.y) + " A" + fmt(r * fr.scale) + " " +
         fmt(r * fr.scale) + " 0 0 " + std::to_string(sweep) + " " +
         fmt(sb.x) + " " + fmt(sb.y);
}

std::string render_halfplane(const RenderSpec& spec,
                             const TilingGeometry& geo) {
  const double xmin = geo.triangles.front().x0;
  const double xmax = geo.triangles.back().x1;
  const double margin = 0.05 * (xmax - xmin);
  const double wx0 = xmin - margin;
  const double wx1 = xmax + margin;
  const double span = wx1 - wx0;
  const double wh = 0.45 * span;
  const Frame fr{spec.size / span, wx0, wh};
  Svg svg(spec.size, spec.size * 0.45);

  // Real axis.
  svg.line(fr.to_screen({wx0, 0.0}), fr.to_screen({wx1, 0.0}), "#888", 1.0);

  for (const IdealTriangle& t : geo.triangles) {
    // Vertical sides up to the frame top; the ideal vertex sits at
    // infinity.
    svg.line(fr.to_screen({t.x0, 0.0}), fr.to_screen({t.x0, wh}), "#000",
             1.5);
    svg.line(fr.to_screen({t.x1, 0.0}), fr.to_screen({t.x1, wh}), "#000",
             1.5);
    // Geodesic between the finite vertices: upper semicircle, which runs
    // clockwise in world coordinates from the left endpoint.
    const double r = 0.5 * (t.x1 - t.x0);
    svg.path(arc_path(fr, {t.x0, 0.0}, {t.x1, 0.0}, r, 0), "#000", 1.5);
  }
  return svg.finish();
}

std::string render_disk(const RenderSpec& spec, const TilingGeometry& geo) {
  const double half = 1.12;
  const Frame fr{spec.size / (2.0 * half), -half, half};
  Svg svg(spec.size, spec.size);
  const Vec2 center = fr.to_screen({0.0, 0.0});
  const double unit = fr.scale;

  // Disk boundary.
  svg.path("M" + fmt(center.x - unit) + " " + fmt(center.y) + " A" +
               fmt(unit) + " " + fmt(unit) + " 0 1 0 " + fmt(center.x + unit) +
               " " + fmt(center.y) + " A" + fmt(unit) + " " + fmt(unit) +
               " 0 1 0 " + fmt(center.x - unit) + " " + fmt(center.y),
           "#888", 1.0);

  const auto edge = [&](Vec2 a, Vec2 b) {
    if (spec.chords) {
      svg.line(fr.to_screen(a), fr.to_screen(b), "#000", 1.2);
      return;
    }
    // Circle through a, b orthogonal to the unit circle: center c with
    // <c,a> = <c,b> = 1.
    const double det = a.x * b.y - a.y * b.x;
    if (std::abs(det) < 1e-12) {
      // Antipodal endpoints: the geodesic is a diameter.
      svg.line(fr.to_screen(a), fr.to_screen(b), "#000", 1.2);
      return;
    }
    const Vec2 c{(b.y - a.y) / det, (a.x - b.x) / det};
    const double r = std::sqrt(c.x * c.x + c.y * c.y - 1.0);
    const double cross = (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
    svg.path(arc_path(fr, a, b, r, cross > 0.0 ? 1 : 0), "#000", 1.2);
  };

  for (const IdealTriangle& t : geo.triangles) {
    const Vec2 p0 = cayley(t.x0);
    const Vec2 p1 = cayley(t.x1);
    edge(p0, p1);
    edge(p0, kRed);
    edge(p1, kRed);
  }

  if (geo.has_blue) {
    const Vec2 blue = cayley(geo.blue_abscissa);
    // Boundary interval: the unit-circle arc between the red and blue
    // points avoiding the triangle vertices (short side, never through
    // the image of 0 at angle pi).
    const int sweep_ccw = blue.y > 0.0 ? 1 : 0;
    svg.path(arc_path(fr, kRed, blue, 1.0, sweep_ccw), "#1f4fd8", 3.0);
    svg.circle(fr.to_screen(blue), 4.0, "#1f4fd8");
  }
  svg.circle(fr.to_screen(kRed), 4.0, "#d82020");
  return svg.finish();
}

}  // namespace

double orbit_vertex(double q, std::int64_t k) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError("orbit weight q must be positive and finite");
  }
  if (q == 1.0) return static_cast<double>(k);
  return (std::pow(q, static_cast<double>(k)) - 1.0) / (q - 1.0);
}

TilingGeometry tiling_geometry(double q, int depth) {
  require_spec(q, depth);
  TilingGeometry geo;
  geo.triangles.reserve(2 * static_cast<std::size_t>(depth) + 1);
  for (std::int64_t k = -depth; k <= depth; ++k) {
    geo.triangles.push_back({orbit_vertex(q, k), orbit_vertex(q, k + 1)});
  }
  if (q != 1.0) {
    geo.has_blue = true;
    geo.blue_abscissa = 1.0 / (1.0 - q);
  }
  return geo;
}

std::string render_svg(const RenderSpec& spec) {
  require_spec(spec.q, spec.depth);
  if (spec.size < 64 || spec.size > 4096) {
    throw DomainError("figure size must lie in [64, 4096] pixels");
  }
  const TilingGeometry geo = tiling_geometry(spec.q, spec.depth);
  return spec.mode == TilingMode::Halfplane ? render_halfplane(spec, geo)
                                            : render_disk(spec, geo);
}

}  // namespace k3stab
