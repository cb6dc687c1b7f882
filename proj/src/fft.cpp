#include "gstable/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace gstable {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_impl(std::complex<double>* a, std::size_t n, int sign) {
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wlen{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

}  // namespace

void fft(std::vector<std::complex<double>>& data, int sign) {
    if (!is_pow2(data.size())) throw std::invalid_argument("fft: length must be a power of two");
    if (sign != 1 && sign != -1) throw std::invalid_argument("fft: sign must be +-1");
    fft_impl(data.data(), data.size(), sign);
}

void fft2(std::vector<std::complex<double>>& data, int nx, int ny, int sign) {
    if (data.size() != static_cast<std::size_t>(nx) * ny) {
        throw std::invalid_argument("fft2: size mismatch");
    }
    if (!is_pow2(nx) || !is_pow2(ny)) throw std::invalid_argument("fft2: power-of-two dims only");
    for (int r = 0; r < nx; ++r) fft_impl(data.data() + static_cast<std::size_t>(r) * ny, ny, sign);
    std::vector<std::complex<double>> col(nx);
    for (int c = 0; c < ny; ++c) {
        for (int r = 0; r < nx; ++r) col[r] = data[static_cast<std::size_t>(r) * ny + c];
        fft_impl(col.data(), nx, sign);
        for (int r = 0; r < nx; ++r) data[static_cast<std::size_t>(r) * ny + c] = col[r];
    }
}

}  // namespace gstable
