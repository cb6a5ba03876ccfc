#include "hsas/grid.hpp"

#include <cmath>
#include <numbers>

namespace hsas {

GridLattice::GridLattice(std::vector<int> shape_, std::vector<double> origin_,
                         std::vector<double> spacing_)
    : dim(static_cast<int>(shape_.size())),
      shape(std::move(shape_)),
      origin(std::move(origin_)),
      spacing(std::move(spacing_)) {
  if (dim < 1) fail(errc::bad_argument, "lattice needs at least one axis");
  if (origin.size() != shape.size() || spacing.size() != shape.size())
    fail(errc::shape_mismatch, "lattice axis metadata lengths disagree");
  for (int n : shape)
    if (n < 1) fail(errc::bad_argument, "lattice shape entries must be >= 1");
  for (double s : spacing)
    if (!(s > 0.0)) fail(errc::bad_argument, "lattice spacing must be positive");
}

std::size_t GridLattice::size() const {
  std::size_t n = 1;
  for (int s : shape) n *= static_cast<std::size_t>(s);
  return n;
}

std::size_t GridLattice::stride(int axis) const {
  std::size_t s = 1;
  for (int a = axis; a < dim; ++a) s *= static_cast<std::size_t>(shape[static_cast<std::size_t>(a)]);
  return s;
}

void GridLattice::coordinates_of(std::size_t flat, std::span<double> out) const {
  for (int a = dim; a >= 1; --a) {
    const auto n = static_cast<std::size_t>(shape[static_cast<std::size_t>(a - 1)]);
    out[static_cast<std::size_t>(a - 1)] = coordinate(a, static_cast<int>(flat % n));
    flat /= n;
  }
}

bool GridLattice::operator==(const GridLattice& o) const {
  return dim == o.dim && shape == o.shape && origin == o.origin && spacing == o.spacing;
}

double GridLattice::bin_frequency(int axis, int k) const {
  const auto a = static_cast<std::size_t>(axis - 1);
  const double n = static_cast<double>(shape[a]);
  const double base = 2.0 * std::numbers::pi / (n * spacing[a]);
  if (static_cast<double>(k) < n / 2.0) return base * static_cast<double>(k);
  return base * static_cast<double>(k) - 2.0 * std::numbers::pi / spacing[a];
}

bool GridLattice::bin_is_negative(int axis, int k) const {
  const int n = shape[static_cast<std::size_t>(axis - 1)];
  if (n % 2 == 0 && k == n / 2) return false;
  return 2 * k > n;
}

ScheffersElement AnalyticGrid::at(std::size_t flat) const {
  ScheffersElement w(lattice.dim);
  for (std::size_t b = 0; b < components.size(); ++b) w.coeffs[b] = components[b][flat];
  return w;
}

GridSignal grid_make(const GridLattice& lattice, const GridSampler& sampler) {
  GridSignal g;
  g.lattice = lattice;
  g.data.resize(lattice.size());
  std::vector<double> x(static_cast<std::size_t>(lattice.dim));
  for (std::size_t i = 0; i < g.data.size(); ++i) {
    lattice.coordinates_of(i, x);
    const double v = sampler(x);
    if (!std::isfinite(v))
      fail(errc::non_finite_sample, "sampler returned non-finite value at flat index " + std::to_string(i));
    g.data[i] = v;
  }
  return g;
}

double frobenius_norm(const HyperSpectrum& s) {
  double acc = 0.0;
  for (const auto& comp : s.components)
    for (double v : comp) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace hsas
