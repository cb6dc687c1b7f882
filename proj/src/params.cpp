#include "gstable/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gstable {

StableParams::StableParams(double alpha, double beta, double sigma)
    : alpha_(alpha), beta_(beta), sigma_(sigma) {
    if (!(alpha > 0.0) || !(alpha <= 2.0)) {
        throw std::invalid_argument("StableParams: alpha must lie in (0, 2], got " +
                                    std::to_string(alpha));
    }
    if (!(beta >= -1.0) || !(beta <= 1.0)) {
        throw std::invalid_argument("StableParams: beta must lie in [-1, 1], got " +
                                    std::to_string(beta));
    }
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("StableParams: sigma must be positive, got " +
                                    std::to_string(sigma));
    }
    if (alpha == 1.0 && beta != 0.0) {
        throw std::invalid_argument(
            "StableParams: alpha = 1 requires beta = 0 "
            "(asymmetric alpha = 1 log-correction branch is unsupported)");
    }
}

GammaParams::GammaParams(double rate) : b_(rate) {
    if (!(rate > 0.0)) {
        throw std::invalid_argument("GammaParams: rate b must be positive, got " +
                                    std::to_string(rate));
    }
}

FellerParams feller_from_params(const StableParams& p) {
    const double pi = M_PI;
    double g;
    if (p.alpha() == 1.0 || p.beta() == 0.0) {
        g = 0.0;  // tan(pi/2) blows up; the symmetric limit is 0
    } else {
        g = (2.0 / pi) * std::atan(-p.beta() * std::tan(pi * p.alpha() / 2.0));
    }
    const double c = std::pow(p.sigma(), p.alpha()) / std::cos(pi * g / 2.0);
    return FellerParams{g, c};
}

}  // namespace gstable
