#include "gstable/charfn.hpp"

#include <cmath>
#include <stdexcept>

namespace gstable {

namespace {
inline double sgn(double x) { return (x > 0.0) - (x < 0.0); }
}  // namespace

complex_t omega(double alpha, double beta, double theta) {
    if (alpha == 1.0) {
        if (beta != 0.0) {
            throw std::invalid_argument(
                "omega: alpha = 1 with beta != 0 is unsupported (log-correction branch)");
        }
        return {1.0, 0.0};
    }
    return {1.0, -beta * sgn(theta) * std::tan(M_PI * alpha / 2.0)};
}

complex_t stable_char_exponent(const FellerParams& fp, double alpha, double theta) {
    if (theta == 0.0) return {0.0, 0.0};
    const double phase = fp.gamma_skew * M_PI / 2.0 * sgn(theta);
    return -std::pow(std::abs(theta), alpha) * complex_t{std::cos(phase), std::sin(phase)};
}

complex_t stable_charfn(const FellerParams& fp, double alpha, double theta, double t) {
    if (t == 0.0 || theta == 0.0) return {1.0, 0.0};
    return std::exp(t * fp.c * stable_char_exponent(fp, alpha, theta));
}

complex_t gs_charfn(const FellerParams& fp, double alpha, double theta, double t) {
    if (t == 0.0 || theta == 0.0) return {1.0, 0.0};
    // Re(1 - c psi) >= 1: principal pow never crosses the branch cut.
    const complex_t base = 1.0 - fp.c * stable_char_exponent(fp, alpha, theta);
    return std::pow(base, -t);
}

complex_t stable_charfn(const StableParams& p, double theta, double t) {
    return stable_charfn(feller_from_params(p), p.alpha(), theta, t);
}

complex_t gs_charfn(const StableParams& p, double theta, double t) {
    return gs_charfn(feller_from_params(p), p.alpha(), theta, t);
}

double gamma_density(const GammaParams& g, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("gamma_density: t must be positive");
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (t > 1.0) return 0.0;
        if (t == 1.0) return g.b();
        return HUGE_VAL;  // integrable singularity, pointwise value diverges
    }
    // log-space evaluation keeps large t and small x well behaved
    const double logv = t * std::log(g.b()) + (t - 1.0) * std::log(x) - g.b() * x - std::lgamma(t);
    return std::exp(logv);
}

complex_t gamma_charfn(const GammaParams& g, double theta, double t) {
    if (t == 0.0 || theta == 0.0) return {1.0, 0.0};
    return std::pow(complex_t{1.0, -theta / g.b()}, -t);
}

complex_t multivariate_gs_bracket(double alpha, const SpectralMeasure& m,
                                  std::span<const double> theta) {
    if (alpha == 1.0) {
        throw std::invalid_argument("multivariate GS: alpha = 1 is unsupported");
    }
    double norm2 = 0.0;
    for (double v : theta) norm2 += v * v;
    if (m.is_isotropic()) {
        return 1.0 + std::pow(norm2, alpha / 2.0);
    }
    complex_t acc = 1.0;
    for (const auto& atom : m.atoms()) {
        double dot = 0.0;
        for (std::size_t i = 0; i < theta.size(); ++i) dot += theta[i] * atom.direction[i];
        if (dot == 0.0) continue;
        acc += std::pow(std::abs(dot), alpha) * omega(alpha, 1.0, dot) * atom.weight;
    }
    return acc;
}

complex_t multivariate_gs_charfn(double alpha, const SpectralMeasure& m,
                                 std::span<const double> theta, double t) {
    if (t == 0.0) return {1.0, 0.0};
    return std::pow(multivariate_gs_bracket(alpha, m, theta), -t);
}

}  // namespace gstable
