#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsas/errors.hpp"

namespace hsas {

/// Binary direction vector j in {0,1}^d. Bit (i-1) of `bits` is the entry for
/// axis i, so the string form "10110" has axis 1 first.
struct Direction {
  int dim = 0;
  std::uint32_t bits = 0;

  Direction() = default;
  Direction(int d, std::uint32_t b);

  static Direction zero(int d) { return Direction(d, 0); }
  static Direction single(int d, int axis);
  static Direction all_ones(int d);
  static Direction from_string(const std::string& s);

  bool axis(int i) const { return (bits >> (i - 1)) & 1u; }  // 1-based
  int weight() const;                                        // |j|
  Direction operator^(const Direction& o) const;
  bool operator==(const Direction& o) const { return dim == o.dim && bits == o.bits; }
  std::string to_string() const;
};

/// An element of the commutative elliptic algebra S_d: 2^d real coefficients,
/// coeffs[b] is the coefficient of the basis blade with generator bitmask b.
struct ScheffersElement {
  int dim = 0;
  std::vector<double> coeffs;

  ScheffersElement() = default;
  explicit ScheffersElement(int d);

  static ScheffersElement unit(int d);
  static ScheffersElement blade(int d, std::uint32_t mask, double c = 1.0);

  std::size_t size() const { return coeffs.size(); }
  double operator[](std::size_t b) const { return coeffs[b]; }
  double& operator[](std::size_t b) { return coeffs[b]; }

  ScheffersElement operator+(const ScheffersElement& o) const;
  ScheffersElement operator-(const ScheffersElement& o) const;
  ScheffersElement operator*(double s) const;
  ScheffersElement operator-() const { return *this * -1.0; }
};

/// Generator conventions for a sign-parameterized hypercomplex basis system.
/// square_sign[i] is the sign of e_{i+1}^2 (in {-1, 0, +1}); swap_sign is the
/// factor picked up when two distinct adjacent generators are exchanged.
struct AlgebraSpec {
  int dim = 0;
  std::vector<int> square_sign;
  int swap_sign = +1;

  static AlgebraSpec scheffers(int d);  // e_i^2 = -1, e_i e_j = e_j e_i
  static AlgebraSpec clifford(int d);   // e_i^2 = -1, e_i e_j = -e_j e_i
};

ScheffersElement sch_mul(const ScheffersElement& a, const ScheffersElement& b);
double sch_norm(const ScheffersElement& a);

/// Multiplicative inverse, obtained by solving the 2^d x 2^d
/// multiplication-by-a system. Throws errc::zero_divisor when the system is
/// numerically singular (relative pivot threshold 1e-12).
ScheffersElement sch_inverse(const ScheffersElement& a);

/// Negates the coefficient of every blade containing generator `axis`.
ScheffersElement conj_axis(const ScheffersElement& a, int axis);

/// cos(theta) e_0 + sin(theta) e_axis.
ScheffersElement unit_exp(int dim, int axis, double theta);

/// Sign with which the bracket projection for source direction i enters the
/// phase-shifted component in direction j: (-1)^popcount((i XOR j) AND NOT i).
int shift_sign(const Direction& i, const Direction& j);

/// Canonicalizes an ordered product of generators (1-based indices) under
/// `spec`, returning the accumulated sign and the surviving blade bitmask.
/// A parabolic square (square_sign 0) annihilates the product: sign 0, mask 0.
std::pair<int, std::uint32_t> normalize_basis_product(const AlgebraSpec& spec,
                                                      std::span<const int> factors);

}  // namespace hsas
