#pragma once

// Minimal iterative radix-2 complex FFT, enough for the windowed spectral
// estimator in modes.hpp.  No scaling is applied in either direction; the
// caller owns normalization.  Sizes must be powers of two.

#include <bit>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace conevac {

// In-place transform of x with kernel e^{sign * 2*pi*i * j*m / N}.
// sign = -1 is the conventional forward DFT, sign = +1 the unscaled inverse.
inline void fft_radix2(std::vector<std::complex<double>>& x, int sign) {
    const std::size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_radix2: size must be a nonzero power of two");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("fft_radix2: sign must be +1 or -1");

    // Bit-reversal permutation.
    const int bits = std::countr_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
        if (r > i) std::swap(x[i], x[r]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wstep{std::cos(angle), std::sin(angle)};
        for (std::size_t start = 0; start < n; start += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto even = x[start + j];
                const auto odd = x[start + j + len / 2] * w;
                x[start + j] = even + odd;
                x[start + j + len / 2] = even - odd;
                w *= wstep;
            }
        }
    }
}

// Frequency (angular) associated with bin m of an N-point transform over
// samples spaced dV apart, in the standard wrap-around ordering.
inline double fft_angular_frequency(std::size_t m, std::size_t n, double dV) {
    const auto half = n / 2;
    const double cycles = (m < half) ? static_cast<double>(m)
                                     : static_cast<double>(m) - static_cast<double>(n);
    return 2.0 * std::numbers::pi * cycles / (static_cast<double>(n) * dV);
}

}  // namespace conevac
