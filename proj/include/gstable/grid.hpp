#pragma once

// Uniform physical grid and its conjugate frequency grid under the
// convention F{u}(theta) = int e^{+i theta x} u(x) dx.

#include <cmath>
#include <stdexcept>
#include <string>

namespace gstable {

class Grid1D {
public:
    Grid1D(double x_min, double x_max, int n_points)
        : x_min_(x_min), x_max_(x_max), n_(n_points) {
        if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
        if (n_points < 8 || (n_points & (n_points - 1)) != 0) {
            throw std::invalid_argument("Grid1D: n_points must be a power of two >= 8, got " +
                                        std::to_string(n_points));
        }
    }

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    int n() const { return n_; }
    double h() const { return (x_max_ - x_min_) / n_; }
    double x(int i) const { return x_min_ + h() * i; }

    // nearest grid index for a physical coordinate
    int index_of(double xv) const {
        const int i = static_cast<int>(std::lround((xv - x_min_) / h()));
        if (i < 0 || i >= n_) throw std::out_of_range("Grid1D::index_of: x outside grid");
        return i;
    }

private:
    double x_min_, x_max_;
    int n_;
};

// Frequencies conjugate to Grid1D: spacing 2 pi / (n h), Nyquist pi / h,
// FFT storage order (k <= n/2 nonnegative, then negative).
class SpectralGrid {
public:
    explicit SpectralGrid(const Grid1D& g) : n_(g.n()), h_(g.h()) {}

    int n() const { return n_; }
    double dtheta() const { return 2.0 * M_PI / (n_ * h_); }
    double nyquist() const { return M_PI / h_; }

    // signed frequency of FFT bin k (bin n/2 maps to -Nyquist)
    double theta(int k) const {
        const int ks = (k < n_ / 2) ? k : k - n_;
        return ks * dtheta();
    }

private:
    int n_;
    double h_;
};

}  // namespace gstable
