#include "gstable/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <stdexcept>

#include "gstable/charfn.hpp"

namespace gstable {

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol) {
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, 15, abs_tol, &err);
    return {v, err};
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f, double abs_tol) {
    boost::math::quadrature::tanh_sinh<double> near;
    boost::math::quadrature::exp_sinh<double> far;
    double e1 = 0.0, e2 = 0.0;
    double l1 = 0.0, l2 = 0.0;
    const double v1 = near.integrate(f, 0.0, 1.0, abs_tol, &e1, &l1);
    auto shifted = [&f](double u) { return f(1.0 + u); };
    const double v2 = far.integrate(shifted, abs_tol, &e2, &l2);
    // tanh_sinh/exp_sinh report relative error estimates
    return {v1 + v2, std::abs(e1 * v1) + std::abs(e2 * v2)};
}

double quadrature_subordinate(const std::function<double(double, double)>& stable_density,
                              const GammaParams& g, double x, double t,
                              double abs_tol, double* err_out) {
    if (!(t > 0.0)) throw std::invalid_argument("quadrature_subordinate: t must be positive");
    auto integrand = [&](double z) { return stable_density(x, z) * gamma_density(g, z, t); };
    const QuadResult r = integrate_semi_infinite(integrand, abs_tol);
    if (err_out != nullptr) *err_out = r.error;
    if (!std::isfinite(r.value) || r.error > 100.0 * abs_tol + 1e-6 * std::abs(r.value)) {
        throw std::runtime_error("quadrature_subordinate: quadrature did not converge");
    }
    return r.value;
}

}  // namespace gstable
