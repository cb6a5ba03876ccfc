#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>

namespace hsas {

/// Error function of a complex argument: Maclaurin series for |z| <= 3.5,
/// Lentz continued fraction for erfc beyond. Accurate to ~1e-12 relative on
/// arguments with Re z bounded away from 0; throws errc::convergence_failure
/// if neither expansion settles.
std::complex<double> erf_complex(std::complex<double> z);

/// Hilbert transform of e^{-alpha x^2} cos(omega_x x), evaluated through the
/// complex-erf closed form.
double oracle_gauss_cos_1d(double alpha, double omega_x, double x);

/// The modulated-Gaussian cube field e^{-10x^2-20y^2-20z^2} cos(50x) cos(40y)
/// cos(60z) and its closed-form phase shifts.
double cube_signal(double x, double y, double z);

/// f_100 of the cube field: the x factor Hilbert-transformed, y/z factors kept.
double oracle_cube_component(double x, double y, double z);

/// Closed-form envelope of the cube field (root-sum-square over all eight
/// separable phase shifts).
double oracle_cube_amplitude(double x, double y, double z);

struct RotatedValues {
  double f = 0.0;
  double f00 = 0.0, f10 = 0.0, f01 = 0.0, f11 = 0.0;
  double amp = 0.0;
};

/// cos(x) cos(y) rotated by pi/4: f' = cos((x-y)/sqrt2) cos((x+y)/sqrt2),
/// with amplitude sqrt(0.5 (1 + cos(sqrt2 x) cos(sqrt2 y))).
RotatedValues oracle_rotated(double x, double y);

/// One-dimensional wave cos((x-y)/sqrt2) embedded in the plane; amplitude is
/// the constant sqrt(2).
RotatedValues oracle_lowdim_rotated(double x, double y);

/// Named closed-form reference field for the demo/verification commands.
struct ClosedFormField {
  std::string name;
  int dim = 0;
  std::function<double(std::span<const double>)> signal;
  std::function<double(std::span<const double>)> amplitude;
};

ClosedFormField closed_form_field(const std::string& name);

}  // namespace hsas
