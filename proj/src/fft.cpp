#include "hsas/fft.hpp"

#include <bit>
#include <numbers>

namespace hsas {

namespace {

using cd = std::complex<double>;

void fft_pow2(std::vector<cd>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // One full-resolution twiddle table; stage t strides through it.
  std::vector<cd> tw(n / 2);
  const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j) tw[j] = std::polar(1.0, base * static_cast<double>(j));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t blk = 0; blk < n; blk += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cd w = tw[j * step];
        const cd u = a[blk + j];
        const cd v = a[blk + j + len / 2] * w;
        a[blk + j] = u + v;
        a[blk + j + len / 2] = u - v;
      }
    }
  }
}

// Arbitrary-length DFT as a circular convolution with a chirp, evaluated with
// power-of-two transforms of size >= 2N-1.
void fft_bluestein(std::vector<cd>& a, int sign) {
  const std::size_t n = a.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cd> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2N keeps the phase argument small and exact.
    const auto q = static_cast<double>((k * k) % (2 * n));
    chirp[k] = std::polar(1.0, sign * std::numbers::pi * q / static_cast<double>(n));
  }

  std::vector<cd> x(m, cd{0.0, 0.0}), y(m, cd{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
  y[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(chirp[k]);

  fft_pow2(x, -1);
  fft_pow2(y, -1);
  for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
  fft_pow2(x, +1);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * scale * chirp[k];
}

}  // namespace

void fft(std::vector<std::complex<double>>& a, int sign) {
  if (a.size() < 2) return;
  if (std::has_single_bit(a.size()))
    fft_pow2(a, sign);
  else
    fft_bluestein(a, sign);
}

}  // namespace hsas
