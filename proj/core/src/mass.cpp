#include "k3stab/mass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qseries.hpp"

namespace k3stab {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError("mass weight q must be positive and finite");
  }
}

}  // namespace

double TailDescriptor::value_at(std::int64_t distance) const {
  if (distance <= 0) return start;
  if (kind == TailKind::Affine || ratio == 1.0) {
    return start + step * static_cast<double>(distance);
  }
  return start + step * detail::geom_sum(ratio, distance);
}

double MassFunction::value_at(std::int64_t index) const {
  if (index < window.lo) return left.value_at(window.lo - index);
  if (index > window.hi) return right.value_at(index - window.hi);
  return values[static_cast<std::size_t>(index - window.lo)];
}

double MassFunction::sup() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

MassFunction MassFunction::normalized() const {
  MassFunction out = *this;
  const double s = sup();
  if (!(s > 0.0)) return out;
  for (double& v : out.values) v /= s;
  out.left.start /= s;
  out.left.step /= s;
  out.right.start /= s;
  out.right.step /= s;
  return out;
}

MassFunction MassFunction::shifted(std::int64_t offset) const {
  MassFunction out = *this;
  out.window.lo += offset;
  out.window.hi += offset;
  out.left.anchor += offset;
  out.right.anchor += offset;
  return out;
}

bool approx_equal(const MassFunction& f, const MassFunction& g, double tol) {
  const std::int64_t lo = std::max(f.window.lo, g.window.lo);
  const std::int64_t hi = std::min(f.window.hi, g.window.hi);
  if (lo > hi) return false;
  double fs = 0.0, gs = 0.0;
  for (std::int64_t k = lo; k <= hi; ++k) {
    fs = std::max(fs, std::abs(f.value_at(k)));
    gs = std::max(gs, std::abs(g.value_at(k)));
  }
  if (!(fs > 0.0) || !(gs > 0.0)) return fs == gs;
  for (std::int64_t k = lo; k <= hi; ++k) {
    if (std::abs(f.value_at(k) / fs - g.value_at(k) / gs) > tol) return false;
  }
  return true;
}

MassABC mass_abc(const ChartPoint& p, double q) {
  require_positive_q(q);
  const Region reg = region(p);
  const Complex z = p.z;
  MassABC out;
  switch (reg) {
    case Region::WMinus:
      out.a = q;
      out.b = std::abs(Complex(1.0, 0.0) - z) *
              std::pow(q, 1.0 + std::arg(Complex(1.0, 0.0) - z) / pi);
      out.c = std::abs(z) * std::pow(q, std::arg(-z) / pi);
      break;
    case Region::WZero:
      out.a = q;
      out.c = std::abs(z);
      // wall equality held exactly, not recomputed from |1-z|
      out.b = out.a + q * out.c;
      break;
    case Region::WPlus:
      out.a = std::abs(z - Complex(1.0, 0.0)) *
              std::pow(q, std::arg(z - Complex(1.0, 0.0)) / pi);
      out.b = q;
      out.c = std::abs(z) * std::pow(q, std::arg(z) / pi - 1.0);
      break;
  }
  return out;
}

TriangleStatus triangle_check(double a, double b, double c, double q) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw DomainError("triangle sides must be positive");
  }
  require_positive_q(q);
  const double wall = a + q * c;
  const double tol_b = eps_triangle * std::max(b, wall);
  if (b > wall + tol_b) return TriangleStatus::Violated;
  const double side_a = b + c;
  if (a >= side_a - eps_triangle * std::max(a, side_a)) {
    return TriangleStatus::Violated;
  }
  const double side_c = a + b / q;
  if (c >= side_c - eps_triangle * std::max(c, side_c)) {
    return TriangleStatus::Violated;
  }
  if (b >= wall - tol_b) return TriangleStatus::OnWall;
  return TriangleStatus::StrictInterior;
}

double mass_from_factors(const ChartPoint& p, std::int64_t n, double q) {
  require_positive_q(q);
  double total = 0.0;
  for (const Factor& f : hn_oracle(p, n)) {
    total += std::abs(central_charge(p, atom_class(f.atom))) *
             std::pow(q, f.phase);
  }
  return total;
}

MassFunction mass_vector(const StabilityPoint& p, double q, Window window) {
  require_positive_q(q);
  const Region reg = region(p.chart);
  const MassABC abc = mass_abc(p.chart, q);

  // Relative kink span; the window must cover it (plus one index on each
  // side) for the tail descriptors to be valid everywhere.
  const std::int64_t kink_lo = (reg == Region::WPlus) ? -2 : -1;
  const std::int64_t kink_hi = (reg == Region::WPlus) ? 1 : 2;
  Window w = window;
  w.lo = std::min(w.lo, p.twist + kink_lo);
  w.hi = std::max(w.hi, p.twist + kink_hi);

  const auto eval = [&](std::int64_t index) -> double {
    const std::int64_t n = index - p.twist;
    if (reg == Region::WPlus) {
      if (n <= -1) return abc.a + abc.c * q * detail::sum_q_up(q, -n - 1);
      return abc.b + abc.c * q * detail::sum_q_down(q, n);
    }
    if (n <= 0) return abc.a + abc.c * detail::sum_q_up(q, -n);
    return abc.b + abc.c * detail::sum_q_down(q, n - 1);
  };

  MassFunction out;
  out.q = q;
  out.window = w;
  out.values.reserve(static_cast<std::size_t>(w.width()));
  for (std::int64_t k = w.lo; k <= w.hi; ++k) out.values.push_back(eval(k));

  const TailKind kind = (q == 1.0) ? TailKind::Affine : TailKind::Geometric;
  out.left = {kind, w.lo, eval(w.lo), eval(w.lo - 1) - eval(w.lo),
              (q == 1.0) ? 1.0 : q};
  out.right = {kind, w.hi, eval(w.hi), eval(w.hi + 1) - eval(w.hi),
               (q == 1.0) ? 1.0 : 1.0 / q};
  return out;
}

// ---------------------------------------------------------------------
// Inversion

namespace {

// Shared residual metric: log-ratio mismatch between the masses at the
// recovered chart and the requested triple.
double inversion_residual(const ChartPoint& chart, double q, double a,
                          double b, double c) {
  const MassABC m = mass_abc(chart, q);
  const double base = std::log(m.a / a);
  const double r1 = std::log(m.b / b) - base;
  const double r2 = std::log(m.c / c) - base;
  return std::max(std::abs(r1), std::abs(r2));
}

struct NewtonProblem {
  Cell cell = Cell::Delta0;
  double L = 0.0;       // log q
  double t_curve = 0.0; // ln(b/a) for Delta0, ln(a/b) for DeltaMinus1
  double t_lin = 0.0;   // ln(c/a) for Delta0, ln(c/b) for DeltaMinus1

  // x = (log r, theta).  Returns residual vector (curve, linear) and the
  // Jacobian in row-major order.
  void eval(const double x[2], double g[2], double J[4]) const {
    const double r = std::exp(x[0]);
    const double th = x[1];
    const double u = r * std::cos(th);
    const double v = r * std::sin(th);
    const double sx = (cell == Cell::Delta0) ? 1.0 + u : u - 1.0;
    const double S = sx * sx + v * v;
    const double args = std::atan2(v, sx);
    const double shift = (cell == Cell::Delta0) ? 0.0 : 1.0;

    g[0] = 0.5 * std::log(S) + (args / pi) * L - shift * L - t_curve;
    g[1] = x[0] + (th / pi) * L - ((cell == Cell::Delta0) ? 1.0 : 2.0) * L -
           t_lin;

    // d(u,v)/d(log r) = (u, v); d(u,v)/d(theta) = (-v, u).  sx - u is a
    // constant (+1 or -1), so the same expressions serve both cells.
    const double dlogS_dx1 = (sx * u + v * v) / S;
    const double dlogS_dth = (-sx * v + v * u) / S;
    const double darg_dx1 = (sx * v - v * u) / S;
    const double darg_dth = (sx * u + v * v) / S;
    J[0] = dlogS_dx1 + (L / pi) * darg_dx1;
    J[1] = dlogS_dth + (L / pi) * darg_dth;
    J[2] = 1.0;
    J[3] = L / pi;
  }

  // Eliminates log r through the linear residual.
  double logr_of_theta(double th) const {
    return t_lin + ((cell == Cell::Delta0) ? 1.0 : 2.0) * L - (th / pi) * L;
  }

  Complex chart_of(const double x[2]) const {
    const Complex w = std::polar(std::exp(x[0]), x[1]);
    return (cell == Cell::Delta0) ? -w : w;
  }
};

void clamp_unknowns(double x[2]) {
  x[0] = std::clamp(x[0], -700.0, 700.0);
  x[1] = std::clamp(x[1], 1e-10, pi - 1e-10);
}

// Strict conditions for the image of the upper two-cell.  Its wall face is
// a = b + q*c; the two forbidden-ray faces are b = a + q^2*c and
// q*c = a + b/q.  Reduces to the plain triangle inequalities at q = 1.
TriangleStatus triangle_check_upper(double a, double b, double c, double q) {
  const double wall = b + q * c;
  const double tol_a = eps_triangle * std::max(a, wall);
  if (a > wall + tol_a) return TriangleStatus::Violated;
  const double side_b = a + q * q * c;
  if (b >= side_b - eps_triangle * std::max(b, side_b)) {
    return TriangleStatus::Violated;
  }
  const double qc = q * c;
  const double side_c = a + b / q;
  if (qc >= side_c - eps_triangle * std::max(qc, side_c)) {
    return TriangleStatus::Violated;
  }
  if (a >= wall - tol_a) return TriangleStatus::OnWall;
  return TriangleStatus::StrictInterior;
}

InversionResult newton_invert(Cell cell, double a, double b, double c,
                              double q) {
  NewtonProblem prob;
  prob.cell = cell;
  prob.L = std::log(q);
  if (cell == Cell::Delta0) {
    prob.t_curve = std::log(b / a);
    prob.t_lin = std::log(c / a);
  } else {
    prob.t_curve = std::log(a / b);
    prob.t_lin = std::log(c / b);
  }

  // Start from the undeformed closed form (angle clamped: the triple may
  // violate the plain triangle inequality while satisfying the weighted
  // one), radius from the eliminated coordinate.
  double cosarg;
  if (cell == Cell::Delta0) {
    cosarg = (a * a + b * b - c * c) / (2.0 * a * b);
  } else {
    cosarg = (b * b + c * c - a * a) / (2.0 * b * c);
  }
  cosarg = std::clamp(cosarg, -1.0 + 1e-9, 1.0 - 1e-9);
  double x[2] = {0.0, std::acos(cosarg)};
  x[0] = prob.logr_of_theta(x[1]);
  clamp_unknowns(x);

  double g[2], J[4];
  prob.eval(x, g, J);
  double res = std::max(std::abs(g[0]), std::abs(g[1]));
  int iterations = 0;
  for (; iterations < 200 && res > 1e-13; ++iterations) {
    const double det = J[0] * J[3] - J[1] * J[2];
    if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
    const double dx0 = (J[3] * g[0] - J[1] * g[1]) / det;
    const double dx1 = (-J[2] * g[0] + J[0] * g[1]) / det;
    bool accepted = false;
    double lambda = 1.0;
    for (int t = 0; t < 40; ++t, lambda *= 0.5) {
      double xn[2] = {x[0] - lambda * dx0, x[1] - lambda * dx1};
      clamp_unknowns(xn);
      double gn[2], Jn[4];
      prob.eval(xn, gn, Jn);
      const double resn = std::max(std::abs(gn[0]), std::abs(gn[1]));
      if (resn < res) {
        x[0] = xn[0];
        x[1] = xn[1];
        g[0] = gn[0];
        g[1] = gn[1];
        std::copy(Jn, Jn + 4, J);
        res = resn;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  if (res > 1e-9) {
    // Bisection fallback on theta with log r eliminated.
    const auto curve = [&](double th) {
      double xt[2] = {prob.logr_of_theta(th), th};
      double gt[2], Jt[4];
      prob.eval(xt, gt, Jt);
      return gt[0];
    };
    const int grid = 2048;
    double lo = 0.0, hi = 0.0;
    double prev_th = pi * (1.0 / grid);
    double prev_val = curve(prev_th);
    bool bracketed = false;
    for (int i = 2; i < grid; ++i) {
      const double th = pi * (static_cast<double>(i) / grid);
      const double val = curve(th);
      if (std::isfinite(prev_val) && std::isfinite(val) &&
          ((prev_val <= 0.0 && val >= 0.0) || (prev_val >= 0.0 && val <= 0.0))) {
        lo = prev_th;
        hi = th;
        bracketed = true;
        break;
      }
      prev_th = th;
      prev_val = val;
    }
    if (!bracketed) {
      throw NoConvergence("mass inversion found no bracket for the angle");
    }
    double flo = curve(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double fm = curve(mid);
      ++iterations;
      if ((flo <= 0.0) == (fm <= 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    x[1] = 0.5 * (lo + hi);
    x[0] = prob.logr_of_theta(x[1]);
    double Jf[4];
    prob.eval(x, g, Jf);
    res = std::max(std::abs(g[0]), std::abs(g[1]));
    if (res > 1e-9) {
      throw NoConvergence("mass inversion residual did not reach 1e-9");
    }
  }

  InversionResult out;
  out.chart = {prob.chart_of(x)};
  out.residual = res;
  out.iterations = iterations;
  return out;
}

}  // namespace

InversionResult invert_cell(double a, double b, double c, Cell cell,
                            double q) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw DomainError("mass triple must be positive");
  }
  require_positive_q(q);

  if (cell == Cell::I0) {
    if (triangle_check(a, b, c, q) != TriangleStatus::OnWall) {
      throw TriangleViolation(
          "wall inversion requires the equality b = a + q*c");
    }
    InversionResult out;
    out.chart = {Complex(-c * q / a, 0.0)};
    out.residual = inversion_residual(out.chart, q, a, b, c);
    return out;
  }

  // The strictness check runs in the convention of the requested cell:
  // DeltaMinus1 has its wall at a = b + q*c.
  const TriangleStatus ts = (cell == Cell::Delta0)
                                ? triangle_check(a, b, c, q)
                                : triangle_check_upper(a, b, c, q);
  if (ts != TriangleStatus::StrictInterior) {
    throw TriangleViolation(
        ts == TriangleStatus::OnWall
            ? "triple lies on the wall; invert with the wall cell"
            : "triple violates the weighted triangle inequalities");
  }

  InversionResult out;
  if (q == 1.0) {
    if (cell == Cell::Delta0) {
      const double theta =
          std::acos(std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0));
      out.chart = {-((b / a) * std::polar(1.0, theta) - Complex(1.0, 0.0))};
    } else {
      const double theta =
          std::acos(std::clamp((b * b + c * c - a * a) / (2.0 * b * c), -1.0, 1.0));
      out.chart = {(c / b) * std::polar(1.0, theta)};
    }
    out.residual = inversion_residual(out.chart, q, a, b, c);
    return out;
  }

  out = newton_invert(cell, a, b, c, q);
  out.residual = inversion_residual(out.chart, q, a, b, c);
  const Region want = (cell == Cell::Delta0) ? Region::WMinus : Region::WPlus;
  if (region(out.chart) != want) {
    throw NoConvergence("mass inversion left the target region");
  }
  return out;
}

// ---------------------------------------------------------------------
// Classification

namespace {

double delta_eval(double a, double b, double c, double q, std::int64_t n) {
  if (n <= 0) return a + c * detail::sum_q_up(q, -n);
  return b + c * detail::sum_q_down(q, n - 1);
}

}  // namespace

CellId classify_mass_point(const MassFunction& f) {
  const std::int64_t lo = f.window.lo;
  const std::int64_t hi = f.window.hi;
  if (f.window.width() < 5) {
    throw AmbiguousWindow("window narrower than 5 indices");
  }
  const double s = f.sup();
  if (!(s > 0.0)) throw AmbiguousWindow("window is identically zero");

  std::vector<double> v(f.values);
  for (double& x : v) x /= s;
  const auto at = [&](std::int64_t k) {
    return v[static_cast<std::size_t>(k - lo)];
  };
  const double tol = eps_projective;
  const double zero_tol = 1e-10;

  // Constant window.
  {
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    if (*mx - *mn <= tol) return {CellId::Kind::RedPoint, 0};
  }

  // Geometric window v[k] proportional to q^-k.  Checked before the zero
  // scan: for q away from 1 the far entries drop below any zero
  // threshold after normalization.
  if (f.q != 1.0) {
    double wmax = 0.0;
    std::vector<double> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      w[i] = v[i] * std::pow(f.q, static_cast<double>(i));
      wmax = std::max(wmax, w[i]);
    }
    if (wmax > 0.0) {
      bool flat = true;
      for (double x : w) {
        if (std::abs(x / wmax - 1.0) > tol) {
          flat = false;
          break;
        }
      }
      if (flat) return {CellId::Kind::BlueQHom, 0};
    }
  }

  // Single zero: vertex pattern.
  {
    std::int64_t zero_index = hi + 1;
    int zero_count = 0;
    for (std::int64_t k = lo; k <= hi; ++k) {
      if (at(k) <= zero_tol) {
        ++zero_count;
        zero_index = std::min(zero_index, k);
      }
    }
    if (zero_count == 1) {
      const std::int64_t n = zero_index;
      if (n - 1 < lo || n + 1 > hi) {
        throw AmbiguousWindow("zero value at the window edge");
      }
      const double beta = at(n - 1) / detail::vertex_value(n, f.q, n - 1);
      bool ok = beta > 0.0;
      for (std::int64_t k = lo; ok && k <= hi; ++k) {
        ok = std::abs(at(k) - beta * detail::vertex_value(n, f.q, k)) <= tol;
      }
      if (ok) return {CellId::Kind::VertexP, n};
      return {CellId::Kind::Outside, 0};
    }
    if (zero_count > 1) return {CellId::Kind::Outside, 0};
  }

  // Two-cell / wall fit: reconstruct (a, b, c) from three points around a
  // candidate kink and verify the whole window.  Wall equality on the
  // fitted triple downgrades the cell to the interval; a triple on one of
  // the other closure faces falls through to the edge scan.
  for (std::int64_t n = lo + 1; n + 2 <= hi; ++n) {
    const double fa = at(n);
    const double fb = at(n + 1);
    const double fc = (at(n - 1) - fa) / f.q;
    if (!(fa > 0.0) || !(fb > 0.0) || !(fc > 0.0)) continue;
    bool ok = true;
    for (std::int64_t k = lo; ok && k <= hi; ++k) {
      ok = std::abs(at(k) - delta_eval(fa, fb, fc, f.q, k - n)) <= tol;
    }
    if (!ok) continue;
    switch (triangle_check(fa, fb, fc, f.q)) {
      case TriangleStatus::StrictInterior:
        return {CellId::Kind::Delta, n};
      case TriangleStatus::OnWall:
        return {CellId::Kind::Interval, n};
      case TriangleStatus::Violated:
        break;
    }
  }

  // Convex combination of two adjacent vertex functions.
  for (std::int64_t n = lo + 1; n + 2 <= hi; ++n) {
    const double alpha = at(n + 1);
    const double beta = at(n);
    if (!(alpha > zero_tol) || !(beta > zero_tol)) continue;
    bool ok = true;
    for (std::int64_t k = lo; ok && k <= hi; ++k) {
      const double pred = alpha * detail::vertex_value(n, f.q, k) +
                          beta * detail::vertex_value(n + 1, f.q, k);
      ok = std::abs(at(k) - pred) <= tol;
    }
    if (ok) return {CellId::Kind::EdgePP, n};
  }

  return {CellId::Kind::Outside, 0};
}

std::string to_string(const CellId& id) {
  switch (id.kind) {
    case CellId::Kind::Delta:
      return "Delta(" + std::to_string(id.index) + ")";
    case CellId::Kind::Interval:
      return "Interval(" + std::to_string(id.index) + ")";
    case CellId::Kind::VertexP:
      return "VertexP(" + std::to_string(id.index) + ")";
    case CellId::Kind::RedPoint:
      return "RedPoint";
    case CellId::Kind::BlueQHom:
      return "BlueQHom";
    case CellId::Kind::EdgePP:
      return "EdgePP(" + std::to_string(id.index) + ")";
    case CellId::Kind::Outside:
      return "Outside";
  }
  return "Outside";
}

}  // namespace k3stab
