#include "gstable/fracops.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>

#include "gstable/charfn.hpp"
#include "gstable/fft.hpp"

namespace gstable {

using cd = std::complex<double>;

namespace {
inline double sgn(double x) { return (x > 0.0) - (x < 0.0); }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// linear convolution via FFT; exact same numbers as the direct sum up to roundoff
std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b) {
    const std::size_t m = next_pow2(a.size() + b.size());
    std::vector<cd> fa(m), fb(m);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    fft(fa, -1);
    fft(fb, -1);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft(fa, +1);
    std::vector<double> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fa[i].real() / static_cast<double>(m);
    return out;
}

// w_k = (-1)^k binom(alpha, k)
std::vector<double> gl_weights(double alpha, std::size_t count) {
    std::vector<double> w(count);
    w[0] = 1.0;
    for (std::size_t k = 1; k < count; ++k) w[k] = w[k - 1] * ((k - 1.0 - alpha) / k);
    return w;
}

// one-sided GL sum out[j] = sum_k w_k u[j - k + r] (left) or u[j + k - r] (right)
std::vector<double> gl_one_sided(std::span<const double> u, const std::vector<double>& w,
                                 int shift, bool left) {
    const std::size_t n = u.size();
    std::vector<double> out(n, 0.0);
    if (n <= 4096) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < w.size(); ++k) {
                const long idx = left ? static_cast<long>(j) - static_cast<long>(k) + shift
                                      : static_cast<long>(j) + static_cast<long>(k) - shift;
                if (idx < 0 || idx >= static_cast<long>(n)) continue;
                acc += w[k] * u[idx];
            }
            out[j] = acc;
        }
        return out;
    }
    if (left) {
        const auto conv = fft_convolve(w, u);  // conv[m] = sum_k w_k u[m-k]
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t m = j + shift;
            if (m < conv.size()) out[j] = conv[m];
        }
    } else {
        std::vector<double> rev(u.rbegin(), u.rend());
        const auto conv = fft_convolve(w, rev);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t m = (n - 1 - j) + shift;
            if (m < conv.size()) out[j] = conv[m];
        }
    }
    return out;
}

// symmetric second-difference quadrature for the alpha = 1 Riesz derivative:
// (1/(pi h)) [ sum_{m>=1} (u[j+m] - 2u[j] + u[j-m]) / m^2  folded exactly ]
std::vector<double> riesz_one_centered(std::span<const double> u, double h) {
    const std::size_t n = u.size();
    std::vector<double> corr(n, 0.0);
    if (n <= 4096) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t m = 1; m < n; ++m) {
                const double up = (j + m < n) ? u[j + m] : 0.0;
                const double um = (j >= m) ? u[j - m] : 0.0;
                acc += (up + um) / (static_cast<double>(m) * m);
            }
            corr[j] = acc;
        }
    } else {
        std::vector<double> kern(2 * n - 1, 0.0);
        for (std::size_t m = 1; m < n; ++m) {
            const double v = 1.0 / (static_cast<double>(m) * m);
            kern[(n - 1) + m] = v;
            kern[(n - 1) - m] = v;
        }
        const auto conv = fft_convolve(kern, u);  // conv[j + n - 1] = sum_m kern-centered
        for (std::size_t j = 0; j < n; ++j) corr[j] = conv[j + n - 1];
    }
    // - 2 u_j sum_{m>=1} 1/m^2 extended to infinity: zeta(2) = pi^2/6
    const double zeta2 = M_PI * M_PI / 6.0;
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = (corr[j] - 2.0 * zeta2 * u[j]) / (M_PI * h);
    return out;
}

void check_boundary_mass(std::span<const double> u, bool left, bool right, double tol) {
    const std::size_t n = u.size();
    const std::size_t m = std::max<std::size_t>(1, n / 100);
    double worst = 0.0;
    if (left) {
        for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, std::abs(u[i]));
    }
    if (right) {
        for (std::size_t i = n - m; i < n; ++i) worst = std::max(worst, std::abs(u[i]));
    }
    if (worst > tol) {
        throw std::invalid_argument(
            "grunwald_letnikov_rf: non-negligible boundary mass (" + std::to_string(worst) +
            " > " + std::to_string(tol) + "); enlarge the grid or relax boundary_tol");
    }
}

}  // namespace

std::complex<double> riesz_feller_multiplier(double alpha, double gamma_skew, double theta) {
    if (std::abs(gamma_skew) > std::min(alpha, 2.0 - alpha) + 1e-12) {
        throw std::invalid_argument("riesz_feller_multiplier: |gamma| must be <= min(alpha, 2-alpha)");
    }
    if (theta == 0.0) return {0.0, 0.0};
    const double phase = gamma_skew * M_PI / 2.0 * sgn(theta);
    return -std::pow(std::abs(theta), alpha) * cd{std::cos(phase), std::sin(phase)};
}

std::vector<double> riesz_feller_spectral(const DensityField& field, double alpha,
                                          double gamma_skew, double* imag_residue) {
    return apply_multiplier(
        field, [=](double th) { return riesz_feller_multiplier(alpha, gamma_skew, th); },
        imag_residue);
}

double riesz_regularized_quadrature(const std::function<double(double)>& u, double x,
                                    double alpha, const RieszQuadOptions& opts) {
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw std::invalid_argument("riesz_regularized_quadrature: alpha must lie in (0, 2]");
    }
    if (alpha == 2.0) {
        // the regularized prefactor vanishes at the endpoint; use d^2/dx^2
        const double h = 1e-3 * std::max(1.0, std::abs(x));
        return (-u(x + 2 * h) + 16 * u(x + h) - 30 * u(x) + 16 * u(x - h) - u(x - 2 * h)) /
               (12 * h * h);
    }
    const double pref = std::exp(std::lgamma(1.0 + alpha)) * std::sin(M_PI * alpha / 2.0) / M_PI;
    const double u0 = u(x);
    auto second_diff = [&](double y) { return (u(x + y) - 2.0 * u0 + u(x - y)); };

    boost::math::quadrature::tanh_sinh<double> ts;
    double err1 = 0.0;
    const double near =
        ts.integrate([&](double y) { return second_diff(y) / std::pow(y, 1.0 + alpha); }, 0.0,
                     1.0, opts.tol, &err1);

    double err2 = 0.0;
    const double far = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double y) { return second_diff(y) / std::pow(y, 1.0 + alpha); }, 1.0, opts.y_cut, 15,
        opts.tol, &err2);

    // beyond y_cut only the -2u(x) part survives for decaying u
    const double tail = -2.0 * u0 / (alpha * std::pow(opts.y_cut, alpha));

    if (!std::isfinite(near) || !std::isfinite(far) || err2 > 1e3 * opts.tol + 1e-8) {
        throw std::runtime_error("riesz_regularized_quadrature: quadrature did not converge");
    }
    return pref * (near + far + tail);
}

std::vector<double> grunwald_letnikov_rf(std::span<const double> values, double h, double alpha,
                                         double gamma_skew, const GlOptions& opts) {
    if (!(h > 0.0)) throw std::invalid_argument("grunwald_letnikov_rf: h must be positive");
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw std::invalid_argument("grunwald_letnikov_rf: alpha must lie in (0, 2]");
    }
    if (std::abs(gamma_skew) > std::min(alpha, 2.0 - alpha) + 1e-12) {
        throw std::invalid_argument("grunwald_letnikov_rf: |gamma| must be <= min(alpha, 2-alpha)");
    }
    if (alpha == 1.0) {
        if (gamma_skew != 0.0) {
            throw std::invalid_argument(
                "grunwald_letnikov_rf: alpha = 1 is supported only with gamma = 0");
        }
        if (opts.check_boundary) check_boundary_mass(values, true, true, opts.boundary_tol);
        // the second-difference form is negative definite already (symbol -|theta|)
        return riesz_one_centered(values, h);
    }

    // Feller weights of the left/right Riemann-Liouville decomposition
    const double cg = std::cos(gamma_skew * M_PI / 2.0);
    const double cplus_base = cg / (2.0 * std::cos(alpha * M_PI / 2.0));
    const double skew =
        (gamma_skew == 0.0) ? 0.0 : std::sin(gamma_skew * M_PI / 2.0) / (2.0 * std::sin(alpha * M_PI / 2.0));
    const double cplus = cplus_base - skew;
    const double cminus = cplus_base + skew;

    if (opts.check_boundary) {
        check_boundary_mass(values, std::abs(cplus) > 1e-15, std::abs(cminus) > 1e-15,
                            opts.boundary_tol);
    }

    const int shift = (alpha > 1.0) ? 1 : 0;
    const auto w = gl_weights(alpha, values.size() + shift + 1);
    const double hs = std::pow(h, -alpha);

    std::vector<double> out(values.size(), 0.0);
    if (std::abs(cplus) > 1e-15) {
        const auto glp = gl_one_sided(values, w, shift, true);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= cplus * hs * glp[j];
    }
    if (std::abs(cminus) > 1e-15) {
        const auto glm = gl_one_sided(values, w, shift, false);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= cminus * hs * glm[j];
    }
    return out;
}

namespace {
// out = centered first difference; ends are left zero (inputs are
// compactly supported, so the stencil sees zeros there anyway)
std::vector<double> centered_d1(std::span<const double> u, double h) {
    std::vector<double> out(u.size(), 0.0);
    for (std::size_t j = 1; j + 1 < u.size(); ++j) out[j] = (u[j + 1] - u[j - 1]) / (2.0 * h);
    return out;
}
}  // namespace

LogSeriesResult log_operator_series(std::span<const double> values, double h, double k,
                                    int order) {
    if (order < 1) throw std::invalid_argument("log_operator_series: order must be >= 1");
    if (k == 0.0) throw std::invalid_argument("log_operator_series: k must be nonzero");
    LogSeriesResult res;
    res.values.assign(values.size(), 0.0);
    std::vector<double> d(values.begin(), values.end());
    double first_term = 0.0, last_term = 0.0;
    for (int j = 1; j <= order; ++j) {
        d = centered_d1(d, h);
        const double coef = ((j % 2 == 1) ? 1.0 : -1.0) / (j * std::pow(k, j));
        double sup = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const double term = coef * d[i];
            res.values[i] += term;
            sup = std::max(sup, std::abs(term));
        }
        if (j == 1) first_term = sup;
        if (j == order) last_term = sup;
    }
    res.term_ratio = (first_term > 0.0) ? last_term / first_term : 0.0;
    res.decay_warning = res.term_ratio > 0.5;
    return res;
}

std::vector<double> log_operator_fractional_spectral(const DensityField& field, double alpha,
                                                     double c, double* imag_residue) {
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw std::invalid_argument("log_operator_fractional_spectral: alpha must lie in (0, 2]");
    }
    return apply_multiplier(
        field,
        [=](double th) {
            return cd{-std::log1p(c * std::pow(std::abs(th), alpha)), 0.0};
        },
        imag_residue);
}

std::complex<double> nabla_M_multiplier(double alpha, const SpectralMeasure& m,
                                        std::span<const double> theta) {
    if (alpha == 1.0) throw std::invalid_argument("nabla_M_multiplier: alpha = 1 is unsupported");
    if (m.is_isotropic()) {
        double norm2 = 0.0;
        for (double v : theta) norm2 += v * v;
        return {-std::pow(norm2, alpha / 2.0), 0.0};
    }
    // -cos(pi alpha/2) (B(theta) - 1) with B the characteristic-function bracket
    const cd bracket = multivariate_gs_bracket(alpha, m, theta);
    return -std::cos(M_PI * alpha / 2.0) * (bracket - 1.0);
}

}  // namespace gstable
