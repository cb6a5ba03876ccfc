#include "hsas/transform.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "hsas/fft.hpp"
#include "hsas/parallel.hpp"

namespace hsas {

namespace {

using cd = std::complex<double>;

// Per-axis complex multipliers shared by the forward/inverse passes: bin phase
// e^{-s*i*w*origin} and the Riemann scale (dx forward, 1/(N dx) inverse).
std::vector<cd> axis_phase(const GridLattice& lat, int axis, int sign) {
  const auto a = static_cast<std::size_t>(axis - 1);
  const int n = lat.shape[a];
  const double scale = (sign < 0) ? lat.spacing[a]
                                  : 1.0 / (static_cast<double>(n) * lat.spacing[a]);
  std::vector<cd> ph(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double w = lat.bin_frequency(axis, k);
    ph[static_cast<std::size_t>(k)] = std::polar(scale, static_cast<double>(sign) * w * lat.origin[a]);
  }
  return ph;
}

// One transform pass along `axis` with unit e_axis: every component pair
// (b, b | bit) without/with the axis generator is treated as a complex plane
// and run through a 1-D FFT line by line.
void hft_pass(std::vector<std::vector<double>>& comps, const GridLattice& lat, int axis,
              int sign) {
  const auto a = static_cast<std::size_t>(axis - 1);
  const auto n = static_cast<std::size_t>(lat.shape[a]);
  const std::size_t total = lat.size();
  const std::size_t step = lat.stride(axis);

  const std::size_t n_lines = total / n;
  const auto ph = axis_phase(lat, axis, sign);
  const std::uint32_t bit = 1u << (axis - 1);

  std::vector<std::uint32_t> low_masks;
  for (std::uint32_t b = 0; b < comps.size(); ++b)
    if (!(b & bit)) low_masks.push_back(b);

  const std::size_t jobs = low_masks.size() * n_lines;
  parallel_for(jobs, [&](std::size_t lo, std::size_t hi) {
    std::vector<cd> line(n);
    for (std::size_t job = lo; job < hi; ++job) {
      const std::uint32_t b = low_masks[job / n_lines];
      const std::size_t l = job % n_lines;
      auto& re = comps[b];
      auto& im = comps[b | bit];
      const std::size_t outer = l / step;
      const std::size_t inner = l % step;
      const std::size_t start = outer * n * step + inner;
      for (std::size_t t = 0; t < n; ++t)
        line[t] = cd{re[start + t * step], im[start + t * step]};
      // The bin phase/scale attaches to the frequency index: after the
      // forward transform, before the inverse one.
      if (sign > 0)
        for (std::size_t t = 0; t < n; ++t) line[t] *= ph[t];
      fft(line, sign);
      if (sign < 0)
        for (std::size_t t = 0; t < n; ++t) line[t] *= ph[t];
      for (std::size_t t = 0; t < n; ++t) {
        re[start + t * step] = line[t].real();
        im[start + t * step] = line[t].imag();
      }
    }
  });
}

std::vector<std::vector<double>> run_passes(std::vector<std::vector<double>> comps,
                                            const GridLattice& lat, int sign) {
  for (int axis = 1; axis <= lat.dim; ++axis) hft_pass(comps, lat, axis, sign);
  return comps;
}

}  // namespace

FrequencyMask FrequencyMask::analytic(const GridLattice& lattice) {
  FrequencyMask m;
  m.per_axis.resize(static_cast<std::size_t>(lattice.dim));
  for (int axis = 1; axis <= lattice.dim; ++axis) {
    const int n = lattice.shape[static_cast<std::size_t>(axis - 1)];
    auto& v = m.per_axis[static_cast<std::size_t>(axis - 1)];
    v.assign(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
      const bool dc = (k == 0);
      const bool nyquist = (n % 2 == 0) && (k == n / 2);
      if (dc || nyquist)
        v[static_cast<std::size_t>(k)] = 1.0;
      else if (2 * k < n)
        v[static_cast<std::size_t>(k)] = 2.0;
      else
        v[static_cast<std::size_t>(k)] = 0.0;
    }
  }
  return m;
}

double FrequencyMask::at(const GridLattice& lattice, std::size_t flat) const {
  double f = 1.0;
  for (int a = lattice.dim; a >= 1; --a) {
    const auto n = static_cast<std::size_t>(lattice.shape[static_cast<std::size_t>(a - 1)]);
    f *= per_axis[static_cast<std::size_t>(a - 1)][flat % n];
    flat /= n;
  }
  return f;
}

HyperSpectrum hft_forward(const GridSignal& g) {
  std::vector<std::vector<double>> comps(std::size_t{1} << g.lattice.dim);
  comps[0] = g.data;
  for (std::size_t b = 1; b < comps.size(); ++b) comps[b].assign(g.data.size(), 0.0);
  return HyperSpectrum{g.lattice, run_passes(std::move(comps), g.lattice, -1)};
}

HyperSpectrum hft_forward(const AnalyticGrid& a) {
  return HyperSpectrum{a.lattice, run_passes(a.components, a.lattice, -1)};
}

AnalyticGrid hft_inverse(const HyperSpectrum& s) {
  return AnalyticGrid{s.lattice, run_passes(s.components, s.lattice, +1)};
}

HyperSpectrum positive_restrict(const HyperSpectrum& s) {
  const FrequencyMask mask = FrequencyMask::analytic(s.lattice);
  HyperSpectrum out = s;
  const std::size_t n = s.lattice.size();
  std::vector<double> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = mask.at(s.lattice, i);
  for (auto& comp : out.components)
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) comp[i] *= m[i];
    });
  return out;
}

GridSignal partial_hilbert(const GridSignal& g, const Direction& j) {
  if (j.dim != g.lattice.dim) fail(errc::dimension_mismatch, "direction length != grid dimension");
  GridSignal out = g;
  for (int axis = 1; axis <= g.lattice.dim; ++axis) {
    if (!j.axis(axis)) continue;
    const auto n = static_cast<std::size_t>(g.lattice.shape[static_cast<std::size_t>(axis - 1)]);
    const std::size_t step = g.lattice.stride(axis);
    const std::size_t n_lines = g.data.size() / n;

    // -i sign(w) with DC and Nyquist zeroed.
    std::vector<cd> mult(n);
    for (std::size_t k = 0; k < n; ++k) {
      const bool dc = (k == 0);
      const bool nyquist = (n % 2 == 0) && (k == n / 2);
      if (dc || nyquist)
        mult[k] = cd{0.0, 0.0};
      else if (2 * k < n)
        mult[k] = cd{0.0, -1.0};
      else
        mult[k] = cd{0.0, +1.0};
    }

    parallel_for(n_lines, [&](std::size_t lo, std::size_t hi) {
      std::vector<cd> line(n);
      for (std::size_t l = lo; l < hi; ++l) {
        const std::size_t outer = l / step;
        const std::size_t inner = l % step;
        const std::size_t start = outer * n * step + inner;
        for (std::size_t t = 0; t < n; ++t) line[t] = cd{out.data[start + t * step], 0.0};
        fft(line, -1);
        for (std::size_t t = 0; t < n; ++t) line[t] *= mult[t];
        fft(line, +1);
        const double inv_n = 1.0 / static_cast<double>(n);
        for (std::size_t t = 0; t < n; ++t) out.data[start + t * step] = line[t].real() * inv_n;
      }
    });
  }
  return out;
}

AnalyticGrid analytic_signal(const GridSignal& g) {
  return hft_inverse(positive_restrict(hft_forward(g)));
}

double negative_support_ratio(const HyperSpectrum& s) {
  const double norm = frobenius_norm(s);
  if (norm == 0.0) return 0.0;
  const std::size_t n = s.lattice.size();
  double worst = 0.0;
  for (std::size_t flat = 0; flat < n; ++flat) {
    bool negative = false;
    std::size_t rest = flat;
    for (int a = s.lattice.dim; a >= 1 && !negative; --a) {
      const auto na = static_cast<std::size_t>(s.lattice.shape[static_cast<std::size_t>(a - 1)]);
      const int k = static_cast<int>(rest % na);
      rest /= na;
      if (s.lattice.bin_is_negative(a, k)) negative = true;
    }
    if (!negative) continue;
    double mag2 = 0.0;
    for (const auto& comp : s.components) mag2 += comp[flat] * comp[flat];
    worst = std::max(worst, mag2);
  }
  return std::sqrt(worst) / norm;
}

GridSignal pad_zeros(const GridSignal& g, int factor) {
  if (factor < 1) fail(errc::bad_argument, "pad factor must be >= 1");
  if (factor == 1) return g;
  std::vector<int> shape = g.lattice.shape;
  for (int& n : shape) n *= factor;
  GridLattice lat(shape, g.lattice.origin, g.lattice.spacing);
  GridSignal out{lat, std::vector<double>(lat.size(), 0.0)};
  const std::size_t n = g.data.size();
  std::vector<int> idx(static_cast<std::size_t>(g.lattice.dim));
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t rest = flat;
    for (int a = g.lattice.dim; a >= 1; --a) {
      const auto na = static_cast<std::size_t>(g.lattice.shape[static_cast<std::size_t>(a - 1)]);
      idx[static_cast<std::size_t>(a - 1)] = static_cast<int>(rest % na);
      rest /= na;
    }
    std::size_t dst = 0;
    for (int a = 1; a <= g.lattice.dim; ++a)
      dst = dst * static_cast<std::size_t>(lat.shape[static_cast<std::size_t>(a - 1)]) +
            static_cast<std::size_t>(idx[static_cast<std::size_t>(a - 1)]);
    out.data[dst] = g.data[flat];
  }
  return out;
}

GridSignal crop_to(const GridSignal& g, const GridLattice& lattice) {
  GridSignal out{lattice, std::vector<double>(lattice.size(), 0.0)};
  std::vector<int> idx(static_cast<std::size_t>(lattice.dim));
  for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
    std::size_t rest = flat;
    for (int a = lattice.dim; a >= 1; --a) {
      const auto na = static_cast<std::size_t>(lattice.shape[static_cast<std::size_t>(a - 1)]);
      idx[static_cast<std::size_t>(a - 1)] = static_cast<int>(rest % na);
      rest /= na;
    }
    std::size_t src = 0;
    for (int a = 1; a <= lattice.dim; ++a)
      src = src * static_cast<std::size_t>(g.lattice.shape[static_cast<std::size_t>(a - 1)]) +
            static_cast<std::size_t>(idx[static_cast<std::size_t>(a - 1)]);
    out.data[flat] = g.data[src];
  }
  return out;
}

namespace {

// Trapezoid nodes/weights over [lo, hi] with n points.
void trapezoid(double lo, double hi, int n, std::vector<double>& nodes, std::vector<double>& wts) {
  nodes.resize(static_cast<std::size_t>(n));
  wts.resize(static_cast<std::size_t>(n));
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) {
    nodes[static_cast<std::size_t>(i)] = lo + h * static_cast<double>(i);
    wts[static_cast<std::size_t>(i)] = (i == 0 || i == n - 1) ? h / 2.0 : h;
  }
}

std::vector<double> fj_quadrature_once(const PointSampler& f, const Direction& j,
                                       const std::vector<std::vector<double>>& eval_points,
                                       const FjQuadrature& q) {
  const int d = j.dim;
  if (static_cast<int>(q.box_lo.size()) != d || static_cast<int>(q.box_hi.size()) != d)
    fail(errc::bad_argument, "integration box does not match dimension");
  if (q.n_space < 2 || q.n_omega < 2 || !(q.omega_max > 0.0))
    fail(errc::bad_argument, "quadrature resolution not set");

  std::vector<std::vector<double>> xn(static_cast<std::size_t>(d)), xw(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a)
    trapezoid(q.box_lo[static_cast<std::size_t>(a)], q.box_hi[static_cast<std::size_t>(a)], q.n_space,
              xn[static_cast<std::size_t>(a)], xw[static_cast<std::size_t>(a)]);
  std::vector<double> on, ow;
  trapezoid(0.0, q.omega_max, q.n_omega, on, ow);

  // Tabulate f over the spatial grid once.
  std::size_t nx = 1;
  for (int a = 0; a < d; ++a) nx *= static_cast<std::size_t>(q.n_space);
  std::vector<double> ftab(nx), fw(nx);
  std::vector<double> pt(static_cast<std::size_t>(d));
  for (std::size_t flat = 0; flat < nx; ++flat) {
    std::size_t rest = flat;
    double wt = 1.0;
    for (int a = d - 1; a >= 0; --a) {
      const std::size_t i = rest % static_cast<std::size_t>(q.n_space);
      rest /= static_cast<std::size_t>(q.n_space);
      pt[static_cast<std::size_t>(a)] = xn[static_cast<std::size_t>(a)][i];
      wt *= xw[static_cast<std::size_t>(a)][i];
    }
    ftab[flat] = f(pt);
    fw[flat] = ftab[flat] * wt;
  }

  std::size_t nw = 1;
  for (int a = 0; a < d; ++a) nw *= static_cast<std::size_t>(q.n_omega);

  const double pi = std::numbers::pi;
  std::vector<double> out(eval_points.size(), 0.0);
  for (std::size_t p = 0; p < eval_points.size(); ++p) {
    const auto& x = eval_points[p];
    double acc = 0.0;
    std::vector<std::size_t> oi(static_cast<std::size_t>(d), 0);
    for (std::size_t of = 0; of < nw; ++of) {
      std::size_t rest = of;
      double owt = 1.0;
      for (int a = d - 1; a >= 0; --a) {
        oi[static_cast<std::size_t>(a)] = rest % static_cast<std::size_t>(q.n_omega);
        rest /= static_cast<std::size_t>(q.n_omega);
        owt *= ow[oi[static_cast<std::size_t>(a)]];
      }
      double inner = 0.0;
      for (std::size_t xf = 0; xf < nx; ++xf) {
        std::size_t xr = xf;
        double kern = 1.0;
        for (int a = d - 1; a >= 0; --a) {
          const std::size_t i = xr % static_cast<std::size_t>(q.n_space);
          xr /= static_cast<std::size_t>(q.n_space);
          const double w = on[oi[static_cast<std::size_t>(a)]];
          const double dx = x[static_cast<std::size_t>(a)] - xn[static_cast<std::size_t>(a)][i];
          const double shift = j.axis(a + 1) ? pi / 2.0 : 0.0;
          kern *= std::cos(w * dx - shift);
        }
        inner += fw[xf] * kern;
      }
      acc += owt * inner;
    }
    out[p] = acc / std::pow(pi, d);
  }
  return out;
}

}  // namespace

std::vector<double> fj_quadrature(const PointSampler& f, const Direction& j,
                                  const std::vector<std::vector<double>>& eval_points,
                                  const FjQuadrature& q) {
  return fj_quadrature_once(f, j, eval_points, q);
}

std::vector<double> fj_quadrature_checked(const PointSampler& f, const Direction& j,
                                          const std::vector<std::vector<double>>& eval_points,
                                          const FjQuadrature& q, double tol) {
  const auto coarse = fj_quadrature_once(f, j, eval_points, q);
  FjQuadrature fine = q;
  fine.n_space = 2 * q.n_space - 1;
  fine.n_omega = 2 * q.n_omega - 1;
  const auto refined = fj_quadrature_once(f, j, eval_points, fine);
  for (std::size_t i = 0; i < coarse.size(); ++i)
    if (std::abs(coarse[i] - refined[i]) > tol)
      fail(errc::convergence_failure,
           "quadrature moved by " + std::to_string(std::abs(coarse[i] - refined[i])) +
               " when halving the step; increase resolution or box");
  return refined;
}

}  // namespace hsas
