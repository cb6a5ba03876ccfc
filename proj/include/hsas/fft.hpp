#pragma once

#include <complex>
#include <vector>

namespace hsas {

/// In-place complex DFT, any length. sign = -1 gives sum f[n] e^{-2*pi*i*n*k/N},
/// sign = +1 the conjugate sum; no 1/N normalization on either direction.
/// Power-of-two lengths run radix-2, everything else goes through Bluestein.
void fft(std::vector<std::complex<double>>& a, int sign);

}  // namespace hsas
