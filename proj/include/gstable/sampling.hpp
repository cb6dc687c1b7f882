#pragma once

// Monte Carlo generation for the stable / Gamma / GS family.
//
// Determinism contract: identical (params, t, n, seed) give bit-identical
// batches.  Batches are produced in fixed-size chunks, each driven by a
// substream derived from (master seed, component tag, chunk index), so the
// output does not depend on scheduling and the stable/Gamma components of
// a subordinated draw are independently reproducible.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gstable/params.hpp"

namespace gstable {

// xoshiro256++ with splitmix64 seeding
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform();      // (0, 1), both ends excluded
    double normal();       // Box-Muller, second value cached
    double exponential();  // rate 1
    double gamma(double shape, double rate = 1.0);  // Marsaglia-Tsang

private:
    std::uint64_t s_[4];
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

// substream seed for (master, component tag, chunk)
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t chunk);

struct SampleBatch {
    std::vector<double> values;  // row-major [n * dim]
    int dim = 1;
    double t = 0.0;
    std::uint64_t seed = 0;
    std::string law;
    std::vector<std::pair<std::string, double>> params;

    std::size_t size() const { return dim > 0 ? values.size() / dim : 0; }

    void write_csv(std::ostream& os) const;       // "index,value" or "index,v1,...,vn"
    void write_sidecar(std::ostream& os) const;   // JSON {law, params, t, n, seed}
};

// Strictly stable variates with characteristic function stable_charfn(p, ., t)
// (Chambers-Mallows-Stuck, mapped to the omega_{alpha,beta} parametrization).
SampleBatch sample_stable(const StableParams& p, double t, std::size_t n, std::uint64_t seed);

// Gamma(shape t, rate b) variates.
SampleBatch sample_gamma(const GammaParams& g, double t, std::size_t n, std::uint64_t seed);

// GS variates via subordination: stable draw at Gamma(t, 1) random time.
SampleBatch sample_gs(const StableParams& p, double t, std::size_t n, std::uint64_t seed);

// Isotropic GS vectors (sub-Gaussian construction: positive (alpha/2)-stable
// amplitude times an independent Gaussian vector, Gamma time change).
SampleBatch sample_isotropic_gs(double alpha, int dim, double t, std::size_t n,
                                std::uint64_t seed);

// First-passage time of Brownian motion through a Gamma(t, 1) barrier:
// z ~ Gamma(t), T = z^2 / N^2.
SampleBatch sample_first_passage_gamma_barrier(double t, std::size_t n, std::uint64_t seed);

// sup |empirical CDF - cdf| over the sample.
double ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf);
double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf);

// two-sample Kolmogorov-Smirnov sup distance
double ks_two_sample(std::span<const double> a, std::span<const double> b);

// empirical characteristic function (1/n) sum e^{i theta X_j}
std::complex<double> ecf(std::span<const double> sample, double theta);

}  // namespace gstable
