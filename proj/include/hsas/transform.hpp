#pragma once

#include <functional>
#include <vector>

#include "hsas/grid.hpp"

namespace hsas {

/// Per-axis per-bin multipliers realizing the separable [1 + sign(w)]
/// restriction: 1 at DC, 2 on strictly positive bins, 0 on strictly negative
/// bins, and 1 on the (even-N) Nyquist bin.
struct FrequencyMask {
  std::vector<std::vector<double>> per_axis;

  static FrequencyMask analytic(const GridLattice& lattice);
  double at(const GridLattice& lattice, std::size_t flat) const;
};

/// Discrete hypercomplex Fourier transform: d separable one-axis passes, axis
/// i using imaginary unit e_i, forward kernel e^{-e_i w x} with physical
/// coordinates and a Riemann dx factor per axis.
HyperSpectrum hft_forward(const GridSignal& g);
HyperSpectrum hft_forward(const AnalyticGrid& a);
AnalyticGrid hft_inverse(const HyperSpectrum& s);

HyperSpectrum positive_restrict(const HyperSpectrum& s);

/// Partial Hilbert transform in direction j: per selected axis the frequency
/// multiplier -i sign(w), with DC and Nyquist bins zeroed.
GridSignal partial_hilbert(const GridSignal& g, const Direction& j);

/// hft_forward -> positive_restrict -> hft_inverse. Component at bitmask
/// ind(j) carries the phase-shifted copy f_j; component 0 is the input.
AnalyticGrid analytic_signal(const GridSignal& g);

/// Largest pointwise hypercomplex magnitude on bins having any strictly
/// negative axis frequency, divided by the Frobenius norm of the spectrum.
double negative_support_ratio(const HyperSpectrum& s);

/// Zero-pads every axis to factor*N samples (signal kept at the low-index
/// corner) and crops back; used by the CLI to tame wrap-around.
GridSignal pad_zeros(const GridSignal& g, int factor);
GridSignal crop_to(const GridSignal& g, const GridLattice& lattice);

// ---------------------------------------------------------------------------
// Direct quadrature of the phase-shift integral; serves as the slow
// independent reference for the FFT pipeline.
// ---------------------------------------------------------------------------

struct FjQuadrature {
  std::vector<double> box_lo;  // spatial integration box, one entry per axis
  std::vector<double> box_hi;
  double omega_max = 0.0;      // truncation of each one-sided frequency axis
  int n_space = 0;             // trapezoid points per spatial axis
  int n_omega = 0;             // trapezoid points per frequency axis
};

using PointSampler = std::function<double(std::span<const double>)>;

std::vector<double> fj_quadrature(const PointSampler& f, const Direction& j,
                                  const std::vector<std::vector<double>>& eval_points,
                                  const FjQuadrature& q);

/// Same, but re-evaluates with both step counts doubled and throws
/// errc::convergence_failure when any value moves by more than tol.
std::vector<double> fj_quadrature_checked(const PointSampler& f, const Direction& j,
                                          const std::vector<std::vector<double>>& eval_points,
                                          const FjQuadrature& q, double tol);

}  // namespace hsas
