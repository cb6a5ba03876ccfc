#include "hsas/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace hsas {

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_argument: return "bad_argument";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::zero_divisor: return "zero_divisor";
    case errc::magic_mismatch: return "magic_mismatch";
    case errc::truncated_payload: return "truncated_payload";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::io_failure: return "io_failure";
    case errc::negative_support: return "negative_support";
    case errc::convergence_failure: return "convergence_failure";
    case errc::non_finite_sample: return "non_finite_sample";
    case errc::unsupported: return "unsupported";
  }
  return "unknown";
}

Direction::Direction(int d, std::uint32_t b) : dim(d), bits(b) {
  if (d < 1 || d > 31) fail(errc::bad_argument, "direction dimension out of range");
  if (b >> d) fail(errc::bad_argument, "direction bits exceed dimension");
}

Direction Direction::single(int d, int axis) {
  if (axis < 1 || axis > d) fail(errc::bad_argument, "axis out of range");
  return Direction(d, 1u << (axis - 1));
}

Direction Direction::all_ones(int d) { return Direction(d, (1u << d) - 1u); }

Direction Direction::from_string(const std::string& s) {
  if (s.empty()) fail(errc::bad_argument, "empty direction string");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= 1u << i;
    else if (s[i] != '0')
      fail(errc::bad_argument, "direction string must contain only 0/1");
  }
  return Direction(static_cast<int>(s.size()), bits);
}

int Direction::weight() const { return std::popcount(bits); }

Direction Direction::operator^(const Direction& o) const {
  if (dim != o.dim) fail(errc::dimension_mismatch, "direction xor with unequal lengths");
  return Direction(dim, bits ^ o.bits);
}

std::string Direction::to_string() const {
  std::string s(static_cast<std::size_t>(dim), '0');
  for (int i = 0; i < dim; ++i)
    if ((bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

ScheffersElement::ScheffersElement(int d) : dim(d) {
  if (d < 0 || d > 20) fail(errc::bad_argument, "algebra dimension out of range");
  coeffs.assign(std::size_t{1} << d, 0.0);
}

ScheffersElement ScheffersElement::unit(int d) {
  ScheffersElement e(d);
  e.coeffs[0] = 1.0;
  return e;
}

ScheffersElement ScheffersElement::blade(int d, std::uint32_t mask, double c) {
  ScheffersElement e(d);
  if (mask >= e.size()) fail(errc::bad_argument, "blade mask exceeds algebra dimension");
  e.coeffs[mask] = c;
  return e;
}

ScheffersElement ScheffersElement::operator+(const ScheffersElement& o) const {
  if (dim != o.dim) fail(errc::dimension_mismatch, "add with unequal dimensions");
  ScheffersElement r = *this;
  for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

ScheffersElement ScheffersElement::operator-(const ScheffersElement& o) const {
  if (dim != o.dim) fail(errc::dimension_mismatch, "subtract with unequal dimensions");
  ScheffersElement r = *this;
  for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

ScheffersElement ScheffersElement::operator*(double s) const {
  ScheffersElement r = *this;
  for (double& c : r.coeffs) c *= s;
  return r;
}

AlgebraSpec AlgebraSpec::scheffers(int d) {
  return AlgebraSpec{d, std::vector<int>(static_cast<std::size_t>(d), -1), +1};
}

AlgebraSpec AlgebraSpec::clifford(int d) {
  return AlgebraSpec{d, std::vector<int>(static_cast<std::size_t>(d), -1), -1};
}

// Blade rule forced by commutativity and e_i^2 = -1:
// e_b * e_g = (-1)^popcount(b & g) e_(b XOR g).
ScheffersElement sch_mul(const ScheffersElement& a, const ScheffersElement& b) {
  if (a.dim != b.dim) fail(errc::dimension_mismatch, "product with unequal dimensions");
  ScheffersElement r(a.dim);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = a.coeffs[i];
    if (ai == 0.0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const double term = ai * b.coeffs[k];
      if (std::popcount(static_cast<std::uint32_t>(i & k)) & 1)
        r.coeffs[i ^ k] -= term;
      else
        r.coeffs[i ^ k] += term;
    }
  }
  return r;
}

double sch_norm(const ScheffersElement& a) {
  double s = 0.0;
  for (double c : a.coeffs) s += c * c;
  return std::sqrt(s);
}

ScheffersElement sch_inverse(const ScheffersElement& a) {
  const std::size_t n = a.size();
  // Column c of M holds the coefficients of a * e_c.
  std::vector<double> m(n * n, 0.0);
  double scale = 0.0;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b) {
      const double v = (std::popcount(static_cast<std::uint32_t>(b & c)) & 1) ? -a.coeffs[b]
                                                                              : a.coeffs[b];
      m[(b ^ c) * n + c] = v;
      scale = std::max(scale, std::abs(v));
    }
  if (scale == 0.0) fail(errc::zero_divisor, "inverse of zero");

  std::vector<double> rhs(n, 0.0);
  rhs[0] = 1.0;

  // Gaussian elimination with partial pivoting; pivots below 1e-12 of the
  // matrix scale mark the element as a zero divisor.
  const double tol = 1e-12 * scale;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (std::abs(m[piv * n + col]) < tol)
      fail(errc::zero_divisor, "multiplication matrix numerically singular");
    if (piv != col) {
      for (std::size_t k = col; k < n; ++k) std::swap(m[piv * n + k], m[col * n + k]);
      std::swap(rhs[piv], rhs[col]);
    }
    const double d = m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / d;
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) m[r * n + k] -= f * m[col * n + k];
      rhs[r] -= f * rhs[col];
    }
  }
  ScheffersElement x(a.dim);
  for (std::size_t row = n; row-- > 0;) {
    double s = rhs[row];
    for (std::size_t k = row + 1; k < n; ++k) s -= m[row * n + k] * x.coeffs[k];
    x.coeffs[row] = s / m[row * n + row];
  }
  return x;
}

ScheffersElement conj_axis(const ScheffersElement& a, int axis) {
  if (axis < 1 || axis > a.dim) fail(errc::bad_argument, "conjugation axis out of range");
  ScheffersElement r = a;
  const std::uint32_t bit = 1u << (axis - 1);
  for (std::size_t b = 0; b < r.size(); ++b)
    if (b & bit) r.coeffs[b] = -r.coeffs[b];
  return r;
}

ScheffersElement unit_exp(int dim, int axis, double theta) {
  if (axis < 1 || axis > dim) fail(errc::bad_argument, "exponential axis out of range");
  ScheffersElement r(dim);
  r.coeffs[0] = std::cos(theta);
  r.coeffs[std::size_t{1} << (axis - 1)] = std::sin(theta);
  return r;
}

int shift_sign(const Direction& i, const Direction& j) {
  if (i.dim != j.dim) fail(errc::dimension_mismatch, "shift_sign with unequal lengths");
  const std::uint32_t diff = (i.bits ^ j.bits) & ~i.bits;
  return (std::popcount(diff) & 1) ? -1 : +1;
}

std::pair<int, std::uint32_t> normalize_basis_product(const AlgebraSpec& spec,
                                                      std::span<const int> factors) {
  std::vector<int> seq(factors.begin(), factors.end());
  for (int g : seq)
    if (g < 1 || g > spec.dim) fail(errc::bad_argument, "generator index out of range");

  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] == seq[i + 1]) {
        sign *= spec.square_sign[static_cast<std::size_t>(seq[i] - 1)];
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i), seq.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        if (sign == 0) return {0, 0};
        break;
      }
      if (seq[i] > seq[i + 1]) {
        std::swap(seq[i], seq[i + 1]);
        sign *= spec.swap_sign;
        changed = true;
        break;
      }
    }
  }
  std::uint32_t mask = 0;
  for (int g : seq) mask |= 1u << (g - 1);
  return {sign, mask};
}

}  // namespace hsas
