#pragma once

#include <cstdint>
#include <vector>

#include "hsas/grid.hpp"

namespace hsas {

/// A grid together with a per-sample defined flag (0 = masked out).
struct MaskedGrid {
  GridSignal values;
  std::vector<std::uint8_t> defined;
};

/// Pointwise root-sum-square over all 2^d phase-shifted components.
GridSignal amplitude(const AnalyticGrid& a);

/// Instantaneous phase in direction j: the two-argument angle of (f, f_j),
/// in (-pi, pi]. Samples where hypot(f, f_j) falls below 1e-9 of the largest
/// amplitude are masked undefined rather than failing.
MaskedGrid phase(const AnalyticGrid& a, const Direction& j);

/// Instantaneous frequency: along each selected axis (ascending order) the
/// phase line is unwrapped, then differentiated with central differences
/// (one-sided at the boundary). Masked samples propagate through the stencil.
MaskedGrid inst_frequency(const MaskedGrid& phase_grid, const Direction& j);

/// Amplitude, all phases and all frequencies of an analytic grid, one entry
/// per direction with |j| >= 1.
struct EnvelopeReport {
  GridSignal amplitude;
  std::vector<Direction> directions;
  std::vector<MaskedGrid> phases;
  std::vector<MaskedGrid> frequencies;
};

EnvelopeReport envelope_report(const AnalyticGrid& a);

/// Pointwise A(x) e^{e_1 phi_1(x)} ... e^{e_d phi_d(x)}; one phase grid per
/// axis, all on the lattice of A.
AnalyticGrid narrowband_construct(const GridSignal& amplitude_grid,
                                  const std::vector<GridSignal>& phases);

struct BedrosianReport {
  double max_abs = 0.0;            // max |H_j[f g] - f H_j[g]|
  double rel_max = 0.0;            // max_abs over max |H_j[f g]|
  double rel_l2 = 0.0;             // L2 discrepancy over L2 of H_j[f g]
  std::vector<double> low_edge;    // per selected axis: largest |w| in f above floor
  std::vector<double> high_edge;   // per selected axis: smallest |w| in g above floor
  bool hypotheses_ok = false;      // low_edge < high_edge on every selected axis
};

/// Measures how well H_j[f g] = f H_j[g] holds for the given pair, along with
/// the observed per-axis band edges of both factors.
BedrosianReport bedrosian_check(const GridSignal& f_low, const GridSignal& g_high,
                                const Direction& j);

}  // namespace hsas
