#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hsas/algebra.hpp"
#include "hsas/errors.hpp"

namespace hsas {

/// Regular d-dimensional sample lattice. Data arrays over a lattice are
/// row-major with the last axis fastest.
struct GridLattice {
  int dim = 0;
  std::vector<int> shape;
  std::vector<double> origin;
  std::vector<double> spacing;

  GridLattice() = default;
  GridLattice(std::vector<int> shape_, std::vector<double> origin_, std::vector<double> spacing_);

  std::size_t size() const;
  std::size_t stride(int axis) const;  // 1-based
  double coordinate(int axis, int index) const {
    return origin[static_cast<std::size_t>(axis - 1)] +
           static_cast<double>(index) * spacing[static_cast<std::size_t>(axis - 1)];
  }
  void coordinates_of(std::size_t flat, std::span<double> out) const;
  bool operator==(const GridLattice& o) const;

  /// Signed angular frequency of DFT bin k on `axis`: 2*pi*k/(N dx) for
  /// k < N/2, shifted down by 2*pi/dx otherwise.
  double bin_frequency(int axis, int k) const;

  /// True on bins strictly inside the negative half-axis. The even-N Nyquist
  /// bin stands for both +-pi/dx and is treated like DC (sign 0), not as a
  /// negative bin.
  bool bin_is_negative(int axis, int k) const;
};

struct GridSignal {
  GridLattice lattice;
  std::vector<double> data;
};

/// Hypercomplex spectrum over the discrete frequency lattice of the source
/// grid: one real array per basis blade, indexed by blade bitmask.
struct HyperSpectrum {
  GridLattice lattice;
  std::vector<std::vector<double>> components;
};

/// Grid of S_d values holding the 2^d phase-shifted components; the component
/// at bitmask ind(j) is f_j and component 0 is the source signal.
struct AnalyticGrid {
  GridLattice lattice;
  std::vector<std::vector<double>> components;

  ScheffersElement at(std::size_t flat) const;
};

using GridSampler = std::function<double(std::span<const double>)>;

GridSignal grid_make(const GridLattice& lattice, const GridSampler& sampler);

double frobenius_norm(const HyperSpectrum& s);

// ---------------------------------------------------------------------------
// HSAS1 container format: one UTF-8 header line followed by the component
// payloads as little-endian binary64, components in ascending bitmask order,
// each row-major with the last axis fastest.
// ---------------------------------------------------------------------------

enum class FileKind { grid, spectrum, analytic };

struct HsasFile {
  FileKind kind = FileKind::grid;
  GridLattice lattice;
  std::vector<std::vector<double>> components;
};

void grid_write(const std::string& path, const GridSignal& g);
void grid_write(const std::string& path, const HyperSpectrum& s);
void grid_write(const std::string& path, const AnalyticGrid& a);

HsasFile grid_read(const std::string& path);
GridSignal as_grid(HsasFile f);
HyperSpectrum as_spectrum(HsasFile f);
AnalyticGrid as_analytic(HsasFile f);

/// CSV convenience for d <= 2: one line per sample, "i1,...,id,value".
void csv_write(const std::string& path, const GridSignal& g);
GridSignal csv_read(const std::string& path, const GridLattice& lattice);

}  // namespace hsas
