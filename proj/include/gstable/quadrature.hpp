#pragma once

#include <functional>

#include "gstable/params.hpp"

namespace gstable {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // reported estimate of the absolute error
};

// Adaptive Gauss-Kronrod on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10);

// Adaptive quadrature over (0, inf) that tolerates an integrable endpoint
// singularity at 0 (split + tanh_sinh / exp_sinh).
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double abs_tol = 1e-10);

// Subordination integral int_0^inf p(x, z) f_Gamma(z, t) dz for the density
// p of the parent process; splits at the z -> 0 singularity of the Gamma
// density when t < 1.  Throws on non-convergence (error above 100x target).
double quadrature_subordinate(const std::function<double(double, double)>& stable_density,
                              const GammaParams& g, double x, double t,
                              double abs_tol = 1e-9, double* err_out = nullptr);

}  // namespace gstable
