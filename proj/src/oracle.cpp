#include "hsas/oracle.hpp"

#include <cmath>
#include <numbers>

#include "hsas/errors.hpp"

namespace hsas {

namespace {

using cd = std::complex<double>;

const double kSqrtPi = std::sqrt(std::numbers::pi);

cd erf_series(cd z) {
  // erf(z) = (2/sqrt(pi)) sum (-1)^n z^(2n+1) / (n! (2n+1))
  const cd z2 = z * z;
  cd term = z;
  cd sum = z;
  for (int n = 1; n < 300; ++n) {
    term *= -z2 / static_cast<double>(n);
    const cd inc = term / static_cast<double>(2 * n + 1);
    sum += inc;
    if (std::abs(inc) <= 1e-18 * std::abs(sum) + 1e-300)
      return sum * (2.0 / kSqrtPi);
  }
  fail(errc::convergence_failure, "erf series did not settle");
}

// erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))),
// valid for Re z > 0; evaluated with the modified Lentz scheme.
cd erfc_cf(cd z) {
  const double tiny = 1e-300;
  cd f{tiny, 0.0}, c{tiny, 0.0}, d{0.0, 0.0};
  for (int n = 0; n < 400; ++n) {
    const cd a = (n == 0) ? cd{1.0, 0.0} : cd{static_cast<double>(n) / 2.0, 0.0};
    const cd b = z;
    d = b + a * d;
    if (std::abs(d) < tiny) d = {tiny, 0.0};
    c = b + a / c;
    if (std::abs(c) < tiny) c = {tiny, 0.0};
    d = 1.0 / d;
    const cd delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return std::exp(-z * z) / kSqrtPi * f;
  }
  fail(errc::convergence_failure, "erfc continued fraction did not settle");
}

}  // namespace

std::complex<double> erf_complex(std::complex<double> z) {
  if (z.real() < 0.0) return -erf_complex(-z);
  if (std::abs(z) <= 3.5) return erf_series(z);
  return 1.0 - erfc_cf(z);
}

double oracle_gauss_cos_1d(double alpha, double omega_x, double x) {
  if (!(alpha > 0.0)) fail(errc::bad_argument, "alpha must be positive");
  const double sa = std::sqrt(alpha);
  const cd i{0.0, 1.0};
  const cd a = erf_complex(cd{omega_x / 2.0, -alpha * x} / sa);
  const cd b = erf_complex(cd{omega_x / 2.0, alpha * x} / sa);
  const cd value =
      0.5 * i * std::exp(-x * (omega_x * i + alpha * x)) * (a - std::exp(2.0 * omega_x * i * x) * b);
  return value.real();
}

namespace {

constexpr double kCubeAlpha[3] = {10.0, 20.0, 20.0};
constexpr double kCubeOmega[3] = {50.0, 40.0, 60.0};

double cube_factor(int axis, double t) {
  return std::exp(-kCubeAlpha[axis] * t * t) * std::cos(kCubeOmega[axis] * t);
}

double cube_factor_shifted(int axis, double t) {
  return oracle_gauss_cos_1d(kCubeAlpha[axis], kCubeOmega[axis], t);
}

}  // namespace

double cube_signal(double x, double y, double z) {
  return cube_factor(0, x) * cube_factor(1, y) * cube_factor(2, z);
}

double oracle_cube_component(double x, double y, double z) {
  return cube_factor_shifted(0, x) * cube_factor(1, y) * cube_factor(2, z);
}

double oracle_cube_amplitude(double x, double y, double z) {
  const double t[3] = {x, y, z};
  double plain[3], shifted[3];
  for (int a = 0; a < 3; ++a) {
    plain[a] = cube_factor(a, t[a]);
    shifted[a] = cube_factor_shifted(a, t[a]);
  }
  double sum = 0.0;
  for (unsigned b = 0; b < 8; ++b) {
    double v = 1.0;
    for (int a = 0; a < 3; ++a) v *= (b >> a & 1u) ? shifted[a] : plain[a];
    sum += v * v;
  }
  return std::sqrt(sum);
}

RotatedValues oracle_rotated(double x, double y) {
  const double r2 = std::numbers::sqrt2;
  RotatedValues v;
  v.f = std::cos((x - y) / r2) * std::cos((x + y) / r2);
  v.f00 = 0.5 * std::cos(r2 * x) + 0.5 * std::cos(r2 * y);
  v.f10 = 0.5 * std::sin(r2 * x);
  v.f01 = 0.5 * std::sin(r2 * y);
  v.f11 = 0.0;
  v.amp = std::sqrt(0.5 * (1.0 + std::cos(r2 * x) * std::cos(r2 * y)));
  return v;
}

RotatedValues oracle_lowdim_rotated(double x, double y) {
  const double u = (x - y) / std::numbers::sqrt2;
  RotatedValues v;
  v.f = std::cos(u);
  v.f00 = std::cos(u);
  v.f10 = std::sin(u);
  v.f01 = -std::sin(u);
  v.f11 = std::cos(u);
  v.amp = std::numbers::sqrt2;
  return v;
}

ClosedFormField closed_form_field(const std::string& name) {
  if (name == "cube") {
    return ClosedFormField{
        "cube", 3,
        [](std::span<const double> p) { return cube_signal(p[0], p[1], p[2]); },
        [](std::span<const double> p) { return oracle_cube_amplitude(p[0], p[1], p[2]); }};
  }
  if (name == "rotated") {
    return ClosedFormField{
        "rotated", 2,
        [](std::span<const double> p) { return oracle_rotated(p[0], p[1]).f; },
        [](std::span<const double> p) { return oracle_rotated(p[0], p[1]).amp; }};
  }
  if (name == "lowdim") {
    return ClosedFormField{
        "lowdim", 2,
        [](std::span<const double> p) { return oracle_lowdim_rotated(p[0], p[1]).f; },
        [](std::span<const double> p) { return oracle_lowdim_rotated(p[0], p[1]).amp; }};
  }
  fail(errc::bad_argument, "unknown demo field '" + name + "'");
}

}  // namespace hsas
