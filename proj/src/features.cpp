#include "hsas/features.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "hsas/fft.hpp"
#include "hsas/transform.hpp"

namespace hsas {

namespace {
constexpr double kPhaseEps = 1e-9;
constexpr double kBandFloor = 1e-12;  // relative energy floor for band edges
}  // namespace

GridSignal amplitude(const AnalyticGrid& a) {
  GridSignal out{a.lattice, std::vector<double>(a.lattice.size(), 0.0)};
  for (const auto& comp : a.components)
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += comp[i] * comp[i];
  for (double& v : out.data) v = std::sqrt(v);
  return out;
}

MaskedGrid phase(const AnalyticGrid& a, const Direction& j) {
  if (j.dim != a.lattice.dim) fail(errc::dimension_mismatch, "direction length != grid dimension");
  if (j.weight() < 1) fail(errc::bad_argument, "phase direction must select at least one axis");
  const auto& f0 = a.components[0];
  const auto& fj = a.components[j.bits];

  double peak = 0.0;
  for (std::size_t i = 0; i < f0.size(); ++i)
    peak = std::max(peak, std::hypot(f0[i], fj[i]));

  MaskedGrid out;
  out.values.lattice = a.lattice;
  out.values.data.assign(f0.size(), 0.0);
  out.defined.assign(f0.size(), 1);
  const double floor = kPhaseEps * peak;
  for (std::size_t i = 0; i < f0.size(); ++i) {
    if (std::hypot(f0[i], fj[i]) < floor || peak == 0.0) {
      out.defined[i] = 0;
      continue;
    }
    out.values.data[i] = std::atan2(fj[i], f0[i]);
  }
  return out;
}

namespace {

// Unwraps a line in place (adds 2*pi multiples so jumps stay <= pi); resets
// the running offset across masked gaps.
void unwrap_line(std::vector<double>& v, const std::vector<std::uint8_t>& def) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double offset = 0.0;
  bool have_prev = false;
  double prev = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!def[i]) {
      have_prev = false;
      offset = 0.0;
      continue;
    }
    if (have_prev) {
      double x = v[i] + offset;
      while (x - prev > std::numbers::pi) {
        x -= two_pi;
        offset -= two_pi;
      }
      while (x - prev < -std::numbers::pi) {
        x += two_pi;
        offset += two_pi;
      }
      v[i] = x;
    }
    prev = v[i];
    have_prev = true;
  }
}

}  // namespace

MaskedGrid inst_frequency(const MaskedGrid& phase_grid, const Direction& j) {
  const GridLattice& lat = phase_grid.values.lattice;
  if (j.dim != lat.dim) fail(errc::dimension_mismatch, "direction length != grid dimension");
  if (j.weight() < 1) fail(errc::bad_argument, "frequency direction must select at least one axis");

  MaskedGrid cur = phase_grid;
  for (int axis = 1; axis <= lat.dim; ++axis) {
    if (!j.axis(axis)) continue;
    const auto n = static_cast<std::size_t>(lat.shape[static_cast<std::size_t>(axis - 1)]);
    if (n < 3) fail(errc::bad_argument, "axis " + std::to_string(axis) + " has fewer than 3 samples");
    const double dx = lat.spacing[static_cast<std::size_t>(axis - 1)];
    const std::size_t step = lat.stride(axis);
    const std::size_t n_lines = cur.values.data.size() / n;

    MaskedGrid next = cur;
    std::vector<double> line(n);
    std::vector<std::uint8_t> def(n);
    for (std::size_t l = 0; l < n_lines; ++l) {
      const std::size_t outer = l / step;
      const std::size_t inner = l % step;
      const std::size_t start = outer * n * step + inner;
      for (std::size_t t = 0; t < n; ++t) {
        line[t] = cur.values.data[start + t * step];
        def[t] = cur.defined[start + t * step];
      }
      unwrap_line(line, def);
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t lo = (t == 0) ? 0 : t - 1;
        const std::size_t hi = (t == n - 1) ? n - 1 : t + 1;
        if (!def[t] || !def[lo] || !def[hi] || lo == hi) {
          next.defined[start + t * step] = 0;
          next.values.data[start + t * step] = 0.0;
          continue;
        }
        next.values.data[start + t * step] =
            (line[hi] - line[lo]) / (static_cast<double>(hi - lo) * dx);
        next.defined[start + t * step] = 1;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

EnvelopeReport envelope_report(const AnalyticGrid& a) {
  EnvelopeReport r;
  r.amplitude = amplitude(a);
  const int d = a.lattice.dim;
  for (std::uint32_t bits = 1; bits < (1u << d); ++bits) {
    Direction j(d, bits);
    r.directions.push_back(j);
    r.phases.push_back(phase(a, j));
    bool enough = true;
    for (int axis = 1; axis <= d; ++axis)
      if (j.axis(axis) && a.lattice.shape[static_cast<std::size_t>(axis - 1)] < 3) enough = false;
    if (enough)
      r.frequencies.push_back(inst_frequency(r.phases.back(), j));
    else
      r.frequencies.push_back(MaskedGrid{GridSignal{a.lattice, std::vector<double>(a.lattice.size(), 0.0)},
                                         std::vector<std::uint8_t>(a.lattice.size(), 0)});
  }
  return r;
}

AnalyticGrid narrowband_construct(const GridSignal& amplitude_grid,
                                  const std::vector<GridSignal>& phases) {
  const GridLattice& lat = amplitude_grid.lattice;
  if (static_cast<int>(phases.size()) != lat.dim)
    fail(errc::bad_argument, "need exactly one phase grid per axis");
  for (const auto& p : phases)
    if (!(p.lattice == lat)) fail(errc::shape_mismatch, "phase grid lattice mismatch");

  const std::size_t n = lat.size();
  const std::size_t n_comp = std::size_t{1} << lat.dim;
  AnalyticGrid out;
  out.lattice = lat;
  out.components.assign(n_comp, std::vector<double>(n, 0.0));

  std::vector<double> c(static_cast<std::size_t>(lat.dim)), s(static_cast<std::size_t>(lat.dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (int ax = 0; ax < lat.dim; ++ax) {
      c[static_cast<std::size_t>(ax)] = std::cos(phases[static_cast<std::size_t>(ax)].data[i]);
      s[static_cast<std::size_t>(ax)] = std::sin(phases[static_cast<std::size_t>(ax)].data[i]);
    }
    const double amp = amplitude_grid.data[i];
    for (std::size_t b = 0; b < n_comp; ++b) {
      double v = amp;
      for (int ax = 0; ax < lat.dim; ++ax)
        v *= (b >> ax & 1u) ? s[static_cast<std::size_t>(ax)] : c[static_cast<std::size_t>(ax)];
      out.components[b][i] = v;
    }
  }
  return out;
}

namespace {

// Energy-per-bin profile along one axis, folded over +-w.
std::vector<double> axis_energy(const GridSignal& g, int axis) {
  const GridLattice& lat = g.lattice;
  const auto n = static_cast<std::size_t>(lat.shape[static_cast<std::size_t>(axis - 1)]);
  const std::size_t step = lat.stride(axis);
  const std::size_t n_lines = g.data.size() / n;
  std::vector<double> energy(n, 0.0);
  std::vector<std::complex<double>> line(n);
  for (std::size_t l = 0; l < n_lines; ++l) {
    const std::size_t outer = l / step;
    const std::size_t inner = l % step;
    const std::size_t start = outer * n * step + inner;
    for (std::size_t t = 0; t < n; ++t) line[t] = {g.data[start + t * step], 0.0};
    fft(line, -1);
    for (std::size_t t = 0; t < n; ++t) energy[t] += std::norm(line[t]);
  }
  return energy;
}

}  // namespace

BedrosianReport bedrosian_check(const GridSignal& f_low, const GridSignal& g_high,
                                const Direction& j) {
  if (!(f_low.lattice == g_high.lattice)) fail(errc::shape_mismatch, "factor lattices differ");
  if (j.dim != f_low.lattice.dim) fail(errc::dimension_mismatch, "direction length != grid dimension");

  GridSignal product = f_low;
  for (std::size_t i = 0; i < product.data.size(); ++i) product.data[i] *= g_high.data[i];

  const GridSignal lhs = partial_hilbert(product, j);
  GridSignal rhs = partial_hilbert(g_high, j);
  for (std::size_t i = 0; i < rhs.data.size(); ++i) rhs.data[i] *= f_low.data[i];

  BedrosianReport rep;
  double ref_max = 0.0, diff2 = 0.0, ref2 = 0.0;
  for (std::size_t i = 0; i < lhs.data.size(); ++i) {
    const double d = lhs.data[i] - rhs.data[i];
    rep.max_abs = std::max(rep.max_abs, std::abs(d));
    ref_max = std::max(ref_max, std::abs(lhs.data[i]));
    diff2 += d * d;
    ref2 += lhs.data[i] * lhs.data[i];
  }
  rep.rel_max = (ref_max > 0.0) ? rep.max_abs / ref_max : rep.max_abs;
  rep.rel_l2 = (ref2 > 0.0) ? std::sqrt(diff2 / ref2) : std::sqrt(diff2);

  rep.hypotheses_ok = true;
  for (int axis = 1; axis <= j.dim; ++axis) {
    if (!j.axis(axis)) continue;
    const auto ef = axis_energy(f_low, axis);
    const auto eg = axis_energy(g_high, axis);
    const auto n = ef.size();
    double tf = 0.0, tg = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      tf += ef[k];
      tg += eg[k];
    }
    double lo_edge = 0.0;
    double hi_edge = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const double w = std::abs(f_low.lattice.bin_frequency(axis, static_cast<int>(k)));
      if (ef[k] > kBandFloor * tf) lo_edge = std::max(lo_edge, w);
      if (eg[k] > kBandFloor * tg) hi_edge = std::min(hi_edge, w);
    }
    rep.low_edge.push_back(lo_edge);
    rep.high_edge.push_back(hi_edge);
    if (!(lo_edge < hi_edge)) rep.hypotheses_ok = false;
  }
  return rep;
}

}  // namespace hsas
