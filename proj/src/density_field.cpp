#include "gstable/density_field.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "gstable/fft.hpp"
#include "gstable/special_functions.hpp"

namespace gstable {

using cd = std::complex<double>;

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::fft_inversion: return "fft_inversion";
        case Provenance::closed_form: return "closed_form";
        case Provenance::quadrature: return "quadrature";
    }
    return "unknown";
}

double DensityField::integral() const {
    const double h = grid.h();
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) s += values[i];
    s -= 0.5 * (values.front() + values.back());
    return s * h;
}

std::vector<double> DensityField::normalized_view() const {
    std::vector<double> v(values.size());
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        v[i] = values[i] > 0.0 ? values[i] : 0.0;
        s += v[i];
    }
    s *= grid.h();
    if (s > 0.0) {
        for (double& x : v) x /= s;
    }
    return v;
}

void DensityField::write_csv(std::ostream& os) const {
    os << "x,density,t,provenance\n";
    char buf[128];
    for (int i = 0; i < grid.n(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%s\n", grid.x(i), values[i], t,
                      to_string(provenance));
        os << buf;
    }
}

TailExpansion gs_charfn_tail(const FellerParams& fp, double alpha, double t,
                             double max_exponent, int max_terms) {
    TailExpansion terms;
    double binom = 1.0;  // binom(-t, m), built by recurrence
    for (int m = 0; m < max_terms; ++m) {
        if (m > 0) binom *= -(t + m - 1.0) / m;
        const double p = alpha * (t + m);
        if (p > max_exponent) break;
        const double phase = -fp.gamma_skew * M_PI * (t + m) / 2.0;
        const cd amp = binom * std::pow(fp.c, -(t + m)) * cd{std::cos(phase), std::sin(phase)};
        terms.push_back(TailTerm{amp, p});
    }
    return terms;
}

namespace {

// (1/pi) Re[ sum_m A_m Theta^{1-p_m} E_{p_m}(i Theta x) ], the exact
// transform of the modeled tail over |theta| > Theta.
double tail_correction(const TailExpansion& tail, double cut, double x) {
    double corr = 0.0;
    for (const auto& term : tail) {
        const double p = term.exponent;
        const cd a = (x >= 0.0) ? term.amplitude : std::conj(term.amplitude);
        if (x == 0.0) {
            // p <= 1 with Re A = 0 contributes nothing; p <= 1 with Re A != 0
            // means the density is genuinely unbounded at 0 - leave the bin
            // to the plain DFT value.
            if (p > 1.0) corr += (term.amplitude * (std::pow(cut, 1.0 - p) / (p - 1.0))).real();
            continue;
        }
        const cd e = expint_imag(p, cut * std::abs(x));
        corr += (a * std::pow(cut, 1.0 - p) * e).real();
    }
    return corr / M_PI;
}

}  // namespace

DensityField invert_charfn(const CharFn& phi, const Grid1D& grid, double t,
                           const InvertOptions& opts) {
    if (opts.pad_factor < 1 || (opts.pad_factor & (opts.pad_factor - 1)) != 0) {
        throw std::invalid_argument("invert_charfn: pad_factor must be a power of two");
    }
    const double h = grid.h();
    const long n_work = static_cast<long>(grid.n()) * opts.pad_factor;
    const double span = n_work * h;
    // keep x_min on the padded lattice so the grid window is bin-aligned
    const long shift = (n_work - grid.n()) / 2;
    const double x0 = grid.x_min() - shift * h;

    const double dtheta = 2.0 * M_PI / span;
    const double nyq = M_PI / h;

    if (opts.check_hermitian) {
        for (double probe : {0.37 * nyq, 0.81 * nyq}) {
            const cd a = phi(probe);
            const cd b = phi(-probe);
            if (std::abs(b - std::conj(a)) > 1e-9 * (1.0 + std::abs(a))) {
                throw std::invalid_argument("invert_charfn: phi is not Hermitian-symmetric");
            }
        }
    }

    std::vector<cd> buf(n_work);
    for (long k = 0; k < n_work; ++k) {
        const long ks = (k < n_work / 2) ? k : k - n_work;
        const double th = ks * dtheta;
        const double ph = -th * x0;
        buf[k] = phi(th) * cd{std::cos(ph), std::sin(ph)};
    }
    // fold the unpaired Nyquist bin to its real part so the output is real
    buf[n_work / 2] = buf[n_work / 2].real();

    fft(buf, -1);

    DensityField out{grid, std::vector<double>(grid.n()), t, Provenance::fft_inversion, 0.0, 0.0};
    const double scale = 1.0 / (n_work * h);
    double residue = 0.0;
    for (int i = 0; i < grid.n(); ++i) {
        const cd v = buf[shift + i] * scale;
        residue = std::max(residue, std::abs(v.imag()));
        out.values[i] = v.real();
    }
    if (opts.tail != nullptr && !opts.tail->empty()) {
        for (int i = 0; i < grid.n(); ++i) {
            out.values[i] += tail_correction(*opts.tail, nyq, grid.x(i));
        }
    }
    out.imag_residue = residue;
    out.norm_error = std::abs(out.integral() - 1.0);
    return out;
}

std::vector<double> apply_multiplier(const DensityField& field,
                                     const std::function<cd(double)>& m,
                                     double* imag_residue) {
    const int n = field.grid.n();
    const double h = field.grid.h();
    const SpectralGrid sg{field.grid};

    std::vector<cd> buf(n);
    for (int i = 0; i < n; ++i) buf[i] = field.values[i];
    fft(buf, +1);  // +i theta x convention: forward transform uses the positive kernel

    // the x_min phase factors of the true transform cancel between the
    // forward and inverse passes, so the multiplier acts on raw FFT bins
    for (int k = 0; k < n; ++k) {
        cd mk = m(sg.theta(k));
        if (k == n / 2) mk = mk.real();  // unpaired Nyquist mode kept Hermitian
        buf[k] *= mk;
    }
    fft(buf, -1);

    std::vector<double> out(n);
    double residue = 0.0;
    for (int i = 0; i < n; ++i) {
        const cd v = buf[i] / static_cast<double>(n);
        residue = std::max(residue, std::abs(v.imag()));
        out[i] = v.real();
    }
    if (imag_residue != nullptr) *imag_residue = residue;
    return out;
}

}  // namespace gstable
