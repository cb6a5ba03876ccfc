#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "hsas/grid.hpp"

namespace hsas {

/// Point of the upper space: per-axis pair (x_i, y_i) standing for
/// zeta_i = x_i + e_i y_i with y_i >= 0 (boundary allowed).
struct UpperPoint {
  std::vector<double> x;
  std::vector<double> y;

  UpperPoint() = default;
  UpperPoint(std::vector<double> x_, std::vector<double> y_);
  int dim() const { return static_cast<int>(x.size()); }
};

/// Evaluates the inverse-transform sum of a positively supported spectrum at
/// zeta, each mode damped by e^{-w y} per axis. Bins carrying any strictly
/// negative axis frequency must be below 1e-9 of the spectrum norm (else
/// errc::negative_support); they are excluded from the sum.
ScheffersElement holo_extend(const HyperSpectrum& s, const UpperPoint& zeta);

using UpperSampler = std::function<ScheffersElement(const UpperPoint&)>;

/// Central-difference residual of the conjugate-variable derivative
/// (1/2)(d/dx_j + e_j d/dy_j) F per axis, as Scheffers norms. Requires
/// y_j >= h at the evaluation point.
std::vector<double> cr_residual(const UpperSampler& f, const UpperPoint& p, double h);

/// Per-axis plane values: entry i is a + b e_i represented as complex a + ib.
using PlanePoint = std::vector<std::complex<double>>;
using PlaneSampler = std::function<ScheffersElement(const PlanePoint&)>;

/// Trapezoid quadrature of the polydisk Cauchy integral over the torus
/// |zeta_i - center_i| = radius for the axes selected by j (other axes held at
/// z). Inside reproduces F(z), outside gives 0; evaluation on the boundary
/// shell is an error.
ScheffersElement cauchy_polydisk(const PlaneSampler& f, const PlanePoint& center, double radius,
                                 const PlanePoint& z, const Direction& j, int n_quad);

/// Conjugate-function transform on the torus via the cot((theta-t)/2) kernel,
/// one pass per selected axis. The principal value is discretized on the
/// staggered half-grid: only nodes at odd index offset enter, with weight 2/N,
/// which is exact for bands below N/2. Sample counts must be even along
/// transformed axes; the lattice is read as uniform angles of period 2*pi.
GridSignal circle_hilbert(const GridSignal& samples, const Direction& j);

/// Harmonic extension and conjugate on the upper half-plane: quadrature of the
/// boundary samples against P(x,y) = y/(pi (x^2+y^2)) and Q = x/(pi (x^2+y^2)).
std::pair<double, double> poisson_halfplane(const GridSignal& boundary, double x, double y);

/// Componentwise Moebius maps (conj(a_i) w_i - e^{e_i theta_i} a_i) /
/// (w_i - e^{e_i theta_i}) sending each unit disk onto a half-plane.
PlanePoint mobius_to_upper(const PlanePoint& w, const PlanePoint& a,
                           const std::vector<double>& theta);

}  // namespace hsas
