#pragma once

// Fractional and pseudo-differential operators on grid data:
//   * Riesz-Feller derivative as a spectral multiplier,
//   * shifted Grunwald-Letnikov stencils (real-space oracle, first order),
//   * regularized Riesz quadrature for smooth callables,
//   * shift operator in time,
//   * logarithmic operators log(1 + D/k) and -log(1 + c |theta|^alpha),
//   * the multivariate spectral-measure multiplier.

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "gstable/density_field.hpp"
#include "gstable/spectral_measure.hpp"

namespace gstable {

// -|theta|^alpha e^{i gamma pi/2 sign theta}; |gamma| <= min(alpha, 2-alpha).
std::complex<double> riesz_feller_multiplier(double alpha, double gamma_skew, double theta);

// apply_multiplier with the Riesz-Feller symbol.
std::vector<double> riesz_feller_spectral(const DensityField& field, double alpha,
                                          double gamma_skew, double* imag_residue = nullptr);

struct RieszQuadOptions {
    double tol = 1e-10;
    double y_cut = 1e4;  // beyond this the second difference is folded analytically
};

// Regularized real-space Riesz derivative of a smooth callable at one point,
//   pref(alpha) * int_0^inf [u(x+y) - 2u(x) + u(x-y)] / y^{1+alpha} dy,
// 0 < alpha < 2; the alpha = 2 endpoint falls back to a plain second
// derivative (the prefactor vanishes there while the symbol stays valid).
double riesz_regularized_quadrature(const std::function<double(double)>& u, double x,
                                    double alpha, const RieszQuadOptions& opts = {});

struct GlOptions {
    // boundary decay required of the input on every side the stencil reaches;
    // heavy-tailed densities need this relaxed to their truncation level
    double boundary_tol = 1e-10;
    bool check_boundary = true;
};

// Discrete Riesz-Feller derivative: weighted left/right Grunwald-Letnikov
// one-sided derivatives (shift 1 for alpha > 1), first-order accurate in h.
// alpha = 1 is supported only for gamma_skew = 0, via a second-difference
// quadrature stencil of the regularized Riesz form.
std::vector<double> grunwald_letnikov_rf(std::span<const double> values, double h, double alpha,
                                         double gamma_skew, const GlOptions& opts = {});

// e^{-k d/dt} f (t) = f(t - k)
template <class F>
auto shift_op(F&& f, double t, double k = 1.0,
              double domain_min = -std::numeric_limits<double>::infinity()) {
    if (t - k < domain_min) {
        throw std::domain_error("shift_op: t - k falls outside the domain of f");
    }
    return f(t - k);
}

// (1 - e^{-k d/dt}) f (t) = f(t) - f(t - k)
template <class F>
auto one_minus_shift(F&& f, double t, double k = 1.0,
                     double domain_min = -std::numeric_limits<double>::infinity()) {
    if (t - k < domain_min) {
        throw std::domain_error("one_minus_shift: t - k falls outside the domain of f");
    }
    return f(t) - f(t - k);
}

struct LogSeriesResult {
    std::vector<double> values;
    double term_ratio = 0.0;  // |term_L| / |term_1| in sup norm
    bool decay_warning = false;
};

// Truncated series sum_{j=1..L} (-1)^{j+1} / (j k^j) D^j applied with
// iterated centered differences; the formal sum is log(1 + D/k) with
// spectral counterpart log(1 - i theta / k).  Non-decay of the last term
// (ratio > 0.5) is flagged, not fatal: the series is asymptotic on
// non-band-limited data.
LogSeriesResult log_operator_series(std::span<const double> values, double h, double k, int order);

// apply_multiplier with m(theta) = -log(1 + c |theta|^alpha): the negated
// infinitesimal generator of the symmetric GS process.
std::vector<double> log_operator_fractional_spectral(const DensityField& field, double alpha,
                                                     double c, double* imag_residue = nullptr);

// Spectral-measure multiplier: -cos(pi alpha/2) sum_j |<theta,z_j>|^alpha
// omega_{alpha,1}(<theta,z_j>) w_j for discrete M; -||theta||^alpha for the
// isotropic case.  alpha = 1 rejected.
std::complex<double> nabla_M_multiplier(double alpha, const SpectralMeasure& m,
                                        std::span<const double> theta);

}  // namespace gstable
