#include "gstable/special_functions.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gstable {

double levy_fp_density(double x, double z) {
    if (!(x > 0.0)) {
        if (x == 0.0) return 0.0;  // exponential factor dominates the power blowup
        throw std::invalid_argument("levy_fp_density: x must be positive");
    }
    if (!(z > 0.0)) throw std::invalid_argument("levy_fp_density: barrier z must be positive");
    return z / std::sqrt(2.0 * M_PI * x * x * x) * std::exp(-z * z / (2.0 * x));
}

double mittag_leffler(double alpha, double z) {
    if (!(alpha > 0.0) || !(alpha <= 1.0)) {
        throw std::invalid_argument("mittag_leffler: alpha must lie in (0, 1]");
    }
    if (z > 0.0) {
        throw std::invalid_argument("mittag_leffler: only z <= 0 is supported");
    }
    if (z == 0.0) return 1.0;
    if (alpha == 1.0) return std::exp(z);

    const double x = -z;
    if (x <= 5.0) {
        // power series, extended precision against the alternating cancellation
        long double sum = 1.0L;
        long double term;
        const long double zl = z;
        long double zk = 1.0L;
        for (int k = 1; k < 400; ++k) {
            zk *= zl;
            term = zk / std::exp(std::lgamma(static_cast<long double>(alpha) * k + 1.0L));
            sum += term;
            if (std::abs(static_cast<double>(term)) < 1e-22 * (1.0 + std::abs(static_cast<double>(sum))) &&
                k > 8) {
                break;
            }
        }
        return static_cast<double>(sum);
    }

    // completely monotone spectral representation for 0 < alpha < 1:
    //   E_alpha(-x) = int_0^inf e^{-r x} K(r) dr,
    //   K(r) = (1/pi) r^{alpha-1} sin(pi alpha) / (r^{2a} + 2 r^a cos(pi alpha) + 1)
    const double s = std::sin(M_PI * alpha);
    const double cpa = std::cos(M_PI * alpha);
    auto kernel = [&](double r) {
        const double ra = std::pow(r, alpha);
        const double denom = ra * ra + 2.0 * ra * cpa + 1.0;
        return std::pow(r, alpha - 1.0) * s / (M_PI * denom) * std::exp(-r * x);
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    double err = 0.0;
    const double v = integrator.integrate(kernel, 1e-12, &err);
    return v;
}

std::complex<double> expint_imag(double p, double y) {
    using cd = std::complex<double>;
    if (!(p > 0.0)) throw std::invalid_argument("expint_imag: p must be positive");
    if (y < 0.0) return std::conj(expint_imag(p, -y));
    if (y == 0.0) {
        if (p <= 1.0) throw std::domain_error("expint_imag: y = 0 requires p > 1");
        return cd{1.0 / (p - 1.0), 0.0};
    }

    const cd z{0.0, y};
    if (y >= 2.0) {
        // modified Lentz continued fraction, e^{-z} / (z + p/(1 + 1/(z + (p+1)/(1 + ...))))
        const double tiny = 1e-300;
        cd b = z + p;
        cd c = cd{1.0 / tiny, 0.0};
        cd d = 1.0 / b;
        cd h = d;
        for (int i = 1; i <= 1000; ++i) {
            const double a = -static_cast<double>(i) * (p - 1.0 + i);
            b += 2.0;
            d = a * d + b;
            if (std::abs(d) < tiny) d = tiny;
            c = b + a / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const cd delta = d * c;
            h *= delta;
            if (std::abs(delta - 1.0) < 1e-16) {
                return std::exp(-z) * h;
            }
        }
        throw std::runtime_error("expint_imag: continued fraction did not converge");
    }

    // small y: rotate the contour, E_p(iy) = -i e^{-iy} int_0^inf (1-iv)^{-p} e^{-yv} dv
    boost::math::quadrature::exp_sinh<double> integrator;
    auto re_part = [&](double v) {
        return (std::pow(cd{1.0, -v}, -p) * std::exp(-y * v)).real();
    };
    auto im_part = [&](double v) {
        return (std::pow(cd{1.0, -v}, -p) * std::exp(-y * v)).imag();
    };
    const double re = integrator.integrate(re_part, 1e-13);
    const double im = integrator.integrate(im_part, 1e-13);
    return std::exp(cd{0.0, -y}) * (cd{0.0, -1.0} * cd{re, im});
}

}  // namespace gstable
