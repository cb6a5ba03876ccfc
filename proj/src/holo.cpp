#include "hsas/holo.hpp"

#include <cmath>
#include <numbers>

#include "hsas/transform.hpp"

namespace hsas {

namespace {
using cd = std::complex<double>;
}

UpperPoint::UpperPoint(std::vector<double> x_, std::vector<double> y_)
    : x(std::move(x_)), y(std::move(y_)) {
  if (x.size() != y.size()) fail(errc::bad_argument, "upper point needs one (x, y) pair per axis");
  for (double v : y)
    if (v < 0.0) fail(errc::bad_argument, "upper point requires y >= 0");
}

ScheffersElement holo_extend(const HyperSpectrum& s, const UpperPoint& zeta) {
  const GridLattice& lat = s.lattice;
  const int d = lat.dim;
  if (zeta.dim() != d) fail(errc::dimension_mismatch, "evaluation point dimension mismatch");

  const double ratio = negative_support_ratio(s);
  if (ratio > 1e-9)
    fail(errc::negative_support,
         "negative-frequency bins carry " + std::to_string(ratio) + " of the spectrum norm");

  // Per-axis mode factors e^{-w y} e^{e_i w x} as complex values; negative
  // bins are dropped outright.
  std::vector<std::vector<cd>> ph(static_cast<std::size_t>(d));
  std::vector<std::vector<bool>> keep(static_cast<std::size_t>(d));
  double scale = 1.0;
  for (int axis = 1; axis <= d; ++axis) {
    const auto a = static_cast<std::size_t>(axis - 1);
    const int n = lat.shape[a];
    scale /= static_cast<double>(n) * lat.spacing[a];
    ph[a].resize(static_cast<std::size_t>(n));
    keep[a].resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double w = lat.bin_frequency(axis, k);
      keep[a][static_cast<std::size_t>(k)] = (w >= 0.0);
      ph[a][static_cast<std::size_t>(k)] =
          std::polar(std::exp(-w * zeta.y[a]), w * zeta.x[a]);
    }
  }

  const std::size_t n_comp = s.components.size();
  ScheffersElement acc(d);
  ScheffersElement w_bin(d);
  std::vector<cd> axis_val(static_cast<std::size_t>(d));
  const std::size_t total = lat.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    bool drop = false;
    for (int a = d; a >= 1; --a) {
      const auto na = static_cast<std::size_t>(lat.shape[static_cast<std::size_t>(a - 1)]);
      const std::size_t k = rest % na;
      rest /= na;
      if (!keep[static_cast<std::size_t>(a - 1)][k]) {
        drop = true;
        break;
      }
      axis_val[static_cast<std::size_t>(a - 1)] = ph[static_cast<std::size_t>(a - 1)][k];
    }
    if (drop) continue;

    // Expand prod_i (re_i + e_i im_i) into blade coefficients.
    ScheffersElement harmonic(d);
    for (std::size_t b = 0; b < harmonic.size(); ++b) {
      double v = 1.0;
      for (int a = 0; a < d; ++a)
        v *= (b >> a & 1u) ? axis_val[static_cast<std::size_t>(a)].imag()
                           : axis_val[static_cast<std::size_t>(a)].real();
      harmonic.coeffs[b] = v;
    }
    for (std::size_t b = 0; b < n_comp; ++b) w_bin.coeffs[b] = s.components[b][flat];
    acc = acc + sch_mul(w_bin, harmonic);
  }
  ScheffersElement out = acc * scale;
  for (double v : out.coeffs)
    if (!std::isfinite(v)) fail(errc::non_finite_sample, "extension evaluated to a non-finite value");
  return out;
}

std::vector<double> cr_residual(const UpperSampler& f, const UpperPoint& p, double h) {
  if (!(h > 0.0)) fail(errc::bad_argument, "step must be positive");
  const int d = p.dim();
  std::vector<double> res(static_cast<std::size_t>(d), 0.0);
  for (int axis = 1; axis <= d; ++axis) {
    const auto a = static_cast<std::size_t>(axis - 1);
    if (p.y[a] < h)
      fail(errc::bad_argument, "step too large: evaluation point leaves the upper space");
    UpperPoint q = p;

    q.x[a] = p.x[a] + h;
    const ScheffersElement fx_p = f(q);
    q.x[a] = p.x[a] - h;
    const ScheffersElement fx_m = f(q);
    q.x[a] = p.x[a];

    q.y[a] = p.y[a] + h;
    const ScheffersElement fy_p = f(q);
    q.y[a] = p.y[a] - h;
    const ScheffersElement fy_m = f(q);

    const ScheffersElement dx = (fx_p - fx_m) * (1.0 / (2.0 * h));
    const ScheffersElement dy = (fy_p - fy_m) * (1.0 / (2.0 * h));
    const ScheffersElement ej = ScheffersElement::blade(dx.dim, 1u << (axis - 1));
    res[a] = sch_norm((dx + sch_mul(ej, dy)) * 0.5);
  }
  return res;
}

namespace {

// Complex value embedded in the plane S(axis).
ScheffersElement embed_plane(int dim, int axis, cd v) {
  ScheffersElement e(dim);
  e.coeffs[0] = v.real();
  e.coeffs[std::size_t{1} << (axis - 1)] = v.imag();
  return e;
}

}  // namespace

ScheffersElement cauchy_polydisk(const PlaneSampler& f, const PlanePoint& center, double radius,
                                 const PlanePoint& z, const Direction& j, int n_quad) {
  const int d = j.dim;
  if (static_cast<int>(center.size()) != d || static_cast<int>(z.size()) != d)
    fail(errc::dimension_mismatch, "center/evaluation point dimension mismatch");
  if (!(radius > 0.0)) fail(errc::bad_argument, "radius must be positive");
  if (n_quad < 4) fail(errc::bad_argument, "need at least 4 quadrature nodes");
  if (j.weight() < 1) fail(errc::bad_argument, "direction must select at least one circle");

  const double shell_tol = 1e-9 * radius;
  for (int axis = 1; axis <= d; ++axis) {
    if (!j.axis(axis)) continue;
    const double dist = std::abs(z[static_cast<std::size_t>(axis - 1)] -
                                 center[static_cast<std::size_t>(axis - 1)]);
    if (std::abs(dist - radius) < shell_tol)
      fail(errc::bad_argument, "evaluation point sits on the boundary shell");
  }

  std::vector<int> axes;
  for (int axis = 1; axis <= d; ++axis)
    if (j.axis(axis)) axes.push_back(axis);
  const auto m = static_cast<std::size_t>(axes.size());

  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(n_quad);
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= static_cast<std::size_t>(n_quad);

  ScheffersElement acc(d);
  PlanePoint zeta = z;
  std::vector<std::size_t> node(m, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = m; i-- > 0;) {
      node[i] = rest % static_cast<std::size_t>(n_quad);
      rest /= static_cast<std::size_t>(n_quad);
    }
    // The e_i of d zeta_i cancels against the 1/e_i of the kernel prefactor,
    // so each axis contributes the plane value r e^{e_i t} / (zeta_i - z_i).
    ScheffersElement weight = ScheffersElement::unit(d);
    for (std::size_t i = 0; i < m; ++i) {
      const int axis = axes[i];
      const double t = dtheta * static_cast<double>(node[i]);
      const cd on_circle = std::polar(radius, t);
      zeta[static_cast<std::size_t>(axis - 1)] = center[static_cast<std::size_t>(axis - 1)] + on_circle;
      const cd kern = on_circle / (zeta[static_cast<std::size_t>(axis - 1)] -
                                   z[static_cast<std::size_t>(axis - 1)]);
      weight = sch_mul(weight, embed_plane(d, axis, kern));
    }
    acc = acc + sch_mul(f(zeta), weight);
  }
  const double norm = std::pow(1.0 / static_cast<double>(n_quad), static_cast<double>(m));
  return acc * norm;
}

GridSignal circle_hilbert(const GridSignal& samples, const Direction& j) {
  const GridLattice& lat = samples.lattice;
  if (j.dim != lat.dim) fail(errc::dimension_mismatch, "direction length != grid dimension");

  GridSignal out = samples;
  for (int axis = 1; axis <= lat.dim; ++axis) {
    if (!j.axis(axis)) continue;
    const auto n = static_cast<std::size_t>(lat.shape[static_cast<std::size_t>(axis - 1)]);
    if (n % 2 != 0) fail(errc::bad_argument, "circle sample count must be even");

    // w[o] = -(2/N) cot(pi o / N) for odd offsets o; the kernel is odd, so
    // each offset pairs with its mirror and constants cancel exactly.
    std::vector<double> w;
    std::vector<std::size_t> offs;
    for (std::size_t o = 1; 2 * o < n; o += 2) {
      offs.push_back(o);
      w.push_back(-2.0 / static_cast<double>(n) *
                  (std::cos(std::numbers::pi * static_cast<double>(o) / static_cast<double>(n)) /
                   std::sin(std::numbers::pi * static_cast<double>(o) / static_cast<double>(n))));
    }

    const std::size_t step = lat.stride(axis);
    const std::size_t n_lines = out.data.size() / n;

    std::vector<double> line(n), conj(n);
    for (std::size_t l = 0; l < n_lines; ++l) {
      const std::size_t outer = l / step;
      const std::size_t inner = l % step;
      const std::size_t start = outer * n * step + inner;
      for (std::size_t t = 0; t < n; ++t) line[t] = out.data[start + t * step];
      for (std::size_t m = 0; m < n; ++m) {
        double s = 0.0;
        for (std::size_t i = 0; i < offs.size(); ++i) {
          const std::size_t o = offs[i];
          s += w[i] * (line[(m + o) % n] - line[(m + n - o) % n]);
        }
        conj[m] = s;
      }
      for (std::size_t t = 0; t < n; ++t) out.data[start + t * step] = conj[t];
    }
  }
  return out;
}

std::pair<double, double> poisson_halfplane(const GridSignal& boundary, double x, double y) {
  if (boundary.lattice.dim != 1) fail(errc::bad_argument, "boundary samples must be 1-D");
  if (!(y > 0.0)) fail(errc::bad_argument, "evaluation requires y > 0");
  const double dx = boundary.lattice.spacing[0];
  double u = 0.0, uconj = 0.0;
  for (std::size_t k = 0; k < boundary.data.size(); ++k) {
    const double t = boundary.lattice.coordinate(1, static_cast<int>(k));
    const double dxk = x - t;
    const double denom = dxk * dxk + y * y;
    u += boundary.data[k] * y / denom;
    uconj += boundary.data[k] * dxk / denom;
  }
  const double scale = dx / std::numbers::pi;
  return {u * scale, uconj * scale};
}

PlanePoint mobius_to_upper(const PlanePoint& w, const PlanePoint& a,
                           const std::vector<double>& theta) {
  if (w.size() != a.size() || w.size() != theta.size())
    fail(errc::dimension_mismatch, "mobius arguments must agree in length");
  PlanePoint out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(std::abs(a[i]) < 1.0)) fail(errc::bad_argument, "disk parameter must satisfy |a| < 1");
    const cd pole = std::polar(1.0, theta[i]);
    const cd denom = w[i] - pole;
    if (std::abs(denom) < 1e-14)
      fail(errc::bad_argument, "evaluation at the pole of the mobius map");
    out[i] = (std::conj(a[i]) * w[i] - pole * a[i]) / denom;
  }
  return out;
}

}  // namespace hsas
