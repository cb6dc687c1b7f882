#pragma once

#include <complex>

namespace gstable {

// First-passage density of standard Brownian motion through level z > 0:
//   z (2 pi x^3)^{-1/2} exp(-z^2 / (2x)),  x > 0.
double levy_fp_density(double x, double z);

// Mittag-Leffler function E_alpha(z) on the negative real axis, 0 < alpha <= 1.
// Series for |z| <= 5, spectral integral representation beyond.
double mittag_leffler(double alpha, double z);

// Generalized exponential integral at purely imaginary argument,
//   E_p(i y) = int_1^inf t^{-p} e^{-i y t} dt,   y >= 0, p > 0.
// Used to integrate |theta|^{-p} characteristic-function tails exactly.
// y = 0 requires p > 1.
std::complex<double> expint_imag(double p, double y);

}  // namespace gstable
