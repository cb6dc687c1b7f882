#pragma once

// FFT inversion of characteristic functions to densities, and application
// of frequency-domain multipliers, under F{u}(theta) = int e^{+i theta x} u dx.
//
// invert_charfn integrates the sampled characteristic function over
// [-Nyquist, Nyquist] by the trapezoid rule (one FFT) and, optionally,
// adds the |theta| > Nyquist remainder exactly from a power-law tail
// expansion phi(theta) ~ sum_m A_m theta^{-p_m} (theta > 0, conjugate on
// the negative axis).  Slowly decaying characteristic functions need the
// tail terms to reach pointwise accuracy beyond ~1e-4.

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "gstable/grid.hpp"
#include "gstable/params.hpp"

namespace gstable {

enum class Provenance { fft_inversion, closed_form, quadrature };

const char* to_string(Provenance p);

struct DensityField {
    Grid1D grid;
    std::vector<double> values;  // raw, possibly slightly negative; never clipped
    double t = 0.0;
    Provenance provenance = Provenance::fft_inversion;
    double imag_residue = 0.0;  // Linf of the imaginary part discarded by inversion
    double norm_error = 0.0;    // |trapezoid integral - 1|

    double integral() const;  // trapezoid over the grid

    // nonnegative, renormalized copy (diagnostics stay on the raw values)
    std::vector<double> normalized_view() const;

    // CSV with header "x,density,t,provenance", 17 significant digits
    void write_csv(std::ostream& os) const;
};

struct TailTerm {
    std::complex<double> amplitude;  // coefficient for theta > 0
    double exponent = 0.0;           // decay power p in A theta^{-p}
};
using TailExpansion = std::vector<TailTerm>;

// Power-law tail of the GS characteristic function (1 - c psi)^{-t}:
// terms binom(-t,m) c^{-(t+m)} e^{-i gamma pi (t+m)/2} |theta|^{-alpha(t+m)},
// kept while alpha (t+m) <= max_exponent.
TailExpansion gs_charfn_tail(const FellerParams& fp, double alpha, double t,
                             double max_exponent = 9.0, int max_terms = 12);

struct InvertOptions {
    // Work on a domain pad_factor times longer (same spacing) and crop the
    // requested window; pushes the periodization error of heavy-tailed laws
    // below the target accuracy.
    int pad_factor = 1;
    const TailExpansion* tail = nullptr;
    bool check_hermitian = true;
};

using CharFn = std::function<std::complex<double>(double)>;

// Discrete Fourier inversion of a Hermitian characteristic function onto
// the grid.  Output is exactly real by construction (Nyquist bin folded to
// its real part); the discarded imaginary residue is recorded.
DensityField invert_charfn(const CharFn& phi, const Grid1D& grid, double t,
                           const InvertOptions& opts = {});

// Forward transform, pointwise multiply by m(theta_k), inverse transform;
// returns the real part and reports the imaginary residue.
std::vector<double> apply_multiplier(const DensityField& field,
                                     const std::function<std::complex<double>(double)>& m,
                                     double* imag_residue = nullptr);

}  // namespace gstable
