#pragma once

// Characteristic exponents/functions and closed-form densities of the
// stable, Gamma and geometric-stable (GS) laws.
//
// Conventions used throughout the library:
//   Fourier transform  F{u}(theta) = int e^{+i theta x} u(x) dx
//   stable char.fn.    Phi_S(theta, t) = exp{ t c psi(theta) }
//   GS char.fn.        Phi_G(theta, t) = (1 - c psi(theta))^{-t}
// with psi(theta) = -|theta|^alpha e^{i gamma pi/2 sign(theta)} and
// (gamma, c) the Feller pair of the law.  Complex powers are principal
// branch; Re(1 - c psi) >= 1 for all theta, so the cut is never crossed.

#include <complex>
#include <span>

#include "gstable/params.hpp"
#include "gstable/spectral_measure.hpp"

namespace gstable {

using complex_t = std::complex<double>;

// Asymmetry factor 1 - i beta sign(theta) tan(pi alpha / 2) for alpha != 1;
// the alpha = 1 branch is supported only for beta = 0 (factor 1).
complex_t omega(double alpha, double beta, double theta);

// psi(theta) = -|theta|^alpha e^{i gamma pi/2 sign theta}
complex_t stable_char_exponent(const FellerParams& fp, double alpha, double theta);

complex_t stable_charfn(const StableParams& p, double theta, double t);
complex_t gs_charfn(const StableParams& p, double theta, double t);

// Same evaluations from a precomputed Feller pair (hot loops).
complex_t stable_charfn(const FellerParams& fp, double alpha, double theta, double t);
complex_t gs_charfn(const FellerParams& fp, double alpha, double theta, double t);

// Gamma subordinator density b^t x^{t-1} e^{-bx} / Gamma(t) for x > 0,
// 0 for x < 0.  For t < 1 the value diverges as x -> 0+; the pointwise
// value is returned and callers deal with the singularity.
double gamma_density(const GammaParams& g, double x, double t);

// (1 - i theta / b)^{-t}, principal branch.
complex_t gamma_charfn(const GammaParams& g, double theta, double t);

// Multivariate GS characteristic function
//   [1 + int |<theta,z>|^alpha omega_{alpha,1}(<theta,z>) M(dz)]^{-t}
// with the integral a finite sum over atoms; the isotropic case uses the
// bracket 1 + ||theta||^alpha.  alpha = 1 is rejected.
complex_t multivariate_gs_charfn(double alpha, const SpectralMeasure& m,
                                 std::span<const double> theta, double t);

// Bracket B(theta) above without the power, shared with the operator side.
complex_t multivariate_gs_bracket(double alpha, const SpectralMeasure& m,
                                  std::span<const double> theta);

}  // namespace gstable
