#pragma once

#include <complex>
#include <vector>

namespace gstable {

// In-place iterative radix-2 FFT, power-of-two length.
//   sign = -1:  X_k = sum_j x_j e^{-2 pi i jk/N}
//   sign = +1:  X_k = sum_j x_j e^{+2 pi i jk/N}
// Unnormalized in both directions.
void fft(std::vector<std::complex<double>>& data, int sign);

// Row-column 2-D transform of an nx-by-ny row-major array.
void fft2(std::vector<std::complex<double>>& data, int nx, int ny, int sign);

}  // namespace gstable
