#include "gstable/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace gstable {

namespace {

constexpr std::size_t kChunk = 8192;
constexpr std::uint64_t kTagStable = 0x737461626c65ull;   // component streams are fixed
constexpr std::uint64_t kTagGamma = 0x67616d6d61ull;
constexpr std::uint64_t kTagNormal = 0x6e6f726d616cull;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double a = 2.0 * M_PI * uniform();
    cached_normal_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

double Rng::exponential() { return -std::log(uniform()); }

double Rng::gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
        throw std::invalid_argument("Rng::gamma: shape and rate must be positive");
    }
    if (shape < 1.0) {
        // boost the shape, then scale back with U^{1/a}
        const double g = gamma(shape + 1.0, 1.0);
        return g * std::pow(uniform(), 1.0 / shape) / rate;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v / rate;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t chunk) {
    std::uint64_t s = master ^ (tag * 0x9E3779B97F4A7C15ull);
    (void)splitmix64(s);
    s ^= chunk * 0xBF58476D1CE4E5B9ull;
    return splitmix64(s);
}

namespace {

// Chambers-Mallows-Stuck draw for the strictly stable law with
// characteristic function exp{-|theta|^alpha (1 - i beta sign(theta) tan(pi alpha/2))}
// (unit scale, unit time).  alpha = 1 supported for beta = 0 (Cauchy).
double cms_standard(Rng& rng, double alpha, double beta) {
    const double v = M_PI * (rng.uniform() - 0.5);
    if (alpha == 1.0) return std::tan(v);  // beta = 0 enforced upstream
    const double w = rng.exponential();
    const double ta = std::tan(M_PI * alpha / 2.0);
    const double b = std::atan(beta * ta) / alpha;
    const double s = std::pow(1.0 + beta * beta * ta * ta, 1.0 / (2.0 * alpha));
    return s * std::sin(alpha * (v + b)) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos(v - alpha * (v + b)) / w, (1.0 - alpha) / alpha);
}

template <class PerVariate>
void run_chunks(std::size_t n, PerVariate&& per_variate) {
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        per_variate(c, lo, hi);
    }
}

}  // namespace

SampleBatch sample_stable(const StableParams& p, double t, std::size_t n, std::uint64_t seed) {
    SampleBatch batch;
    batch.values.resize(n);
    batch.t = t;
    batch.seed = seed;
    batch.law = "stable";
    batch.params = {{"alpha", p.alpha()}, {"beta", p.beta()}, {"sigma", p.sigma()}};
    const double scale = p.sigma() * std::pow(t, 1.0 / p.alpha());
    run_chunks(n, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Rng rng(derive_seed(seed, kTagStable, c));
        for (std::size_t i = lo; i < hi; ++i) {
            batch.values[i] = scale * cms_standard(rng, p.alpha(), p.beta());
        }
    });
    return batch;
}

SampleBatch sample_gamma(const GammaParams& g, double t, std::size_t n, std::uint64_t seed) {
    if (!(t > 0.0)) throw std::invalid_argument("sample_gamma: t must be positive");
    SampleBatch batch;
    batch.values.resize(n);
    batch.t = t;
    batch.seed = seed;
    batch.law = "gamma";
    batch.params = {{"b", g.b()}};
    run_chunks(n, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Rng rng(derive_seed(seed, kTagGamma, c));
        for (std::size_t i = lo; i < hi; ++i) batch.values[i] = rng.gamma(t, g.b());
    });
    return batch;
}

SampleBatch sample_gs(const StableParams& p, double t, std::size_t n, std::uint64_t seed) {
    if (!(t > 0.0)) throw std::invalid_argument("sample_gs: t must be positive");
    SampleBatch batch;
    batch.values.resize(n);
    batch.t = t;
    batch.seed = seed;
    batch.law = "gs";
    batch.params = {{"alpha", p.alpha()}, {"beta", p.beta()}, {"sigma", p.sigma()}};
    run_chunks(n, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Rng grng(derive_seed(seed, kTagGamma, c));
        Rng srng(derive_seed(seed, kTagStable, c));
        for (std::size_t i = lo; i < hi; ++i) {
            const double z = grng.gamma(t, 1.0);  // random time; stable scale z^{1/alpha}
            batch.values[i] =
                p.sigma() * std::pow(z, 1.0 / p.alpha()) * cms_standard(srng, p.alpha(), p.beta());
        }
    });
    return batch;
}

SampleBatch sample_isotropic_gs(double alpha, int dim, double t, std::size_t n,
                                std::uint64_t seed) {
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw std::invalid_argument("sample_isotropic_gs: alpha must lie in (0, 2]");
    }
    if (dim < 1) throw std::invalid_argument("sample_isotropic_gs: dim must be >= 1");
    if (!(t > 0.0)) throw std::invalid_argument("sample_isotropic_gs: t must be positive");
    SampleBatch batch;
    batch.values.resize(n * static_cast<std::size_t>(dim));
    batch.dim = dim;
    batch.t = t;
    batch.seed = seed;
    batch.law = "isotropic-gs";
    batch.params = {{"alpha", alpha}, {"dim", static_cast<double>(dim)}};
    // amplitude A: positive (alpha/2)-stable with E e^{-sA} = e^{-s^{alpha/2}};
    // scaling cos(pi alpha/4)^{2/alpha} maps the CMS skewed draw onto it
    const double half = alpha / 2.0;
    const double amp_scale = (alpha < 2.0) ? std::pow(std::cos(M_PI * half / 2.0), 1.0 / half) : 1.0;
    run_chunks(n, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Rng grng(derive_seed(seed, kTagGamma, c));
        Rng arng(derive_seed(seed, kTagStable, c));
        Rng nrng(derive_seed(seed, kTagNormal, c));
        for (std::size_t i = lo; i < hi; ++i) {
            const double z = grng.gamma(t, 1.0);
            const double a = (alpha < 2.0) ? amp_scale * cms_standard(arng, half, 1.0) : 1.0;
            const double r = std::pow(z, 1.0 / alpha) * std::sqrt(a);
            for (int d = 0; d < dim; ++d) {
                batch.values[i * dim + d] = r * std::sqrt(2.0) * nrng.normal();
            }
        }
    });
    return batch;
}

SampleBatch sample_first_passage_gamma_barrier(double t, std::size_t n, std::uint64_t seed) {
    if (!(t > 0.0)) throw std::invalid_argument("sample_first_passage: t must be positive");
    SampleBatch batch;
    batch.values.resize(n);
    batch.t = t;
    batch.seed = seed;
    batch.law = "first-passage";
    batch.params = {{"alpha", 0.5}, {"beta", 1.0}, {"sigma", 1.0}};
    run_chunks(n, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Rng grng(derive_seed(seed, kTagGamma, c));
        Rng nrng(derive_seed(seed, kTagNormal, c));
        for (std::size_t i = lo; i < hi; ++i) {
            const double z = grng.gamma(t, 1.0);
            double nn;
            do {
                nn = nrng.normal();
            } while (nn == 0.0);
            batch.values[i] = z * z / (nn * nn);
        }
    });
    return batch;
}

void SampleBatch::write_csv(std::ostream& os) const {
    char buf[64];
    if (dim == 1) {
        os << "index,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, values[i]);
            os << buf;
        }
        return;
    }
    os << "index";
    for (int d = 1; d <= dim; ++d) os << ",v" << d;
    os << "\n";
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        os << i;
        for (int d = 0; d < dim; ++d) {
            std::snprintf(buf, sizeof(buf), ",%.17g", values[i * dim + d]);
            os << buf;
        }
        os << "\n";
    }
}

void SampleBatch::write_sidecar(std::ostream& os) const {
    nlohmann::json j;
    j["law"] = law;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["t"] = t;
    j["n"] = size();
    j["seed"] = seed;
    os << j.dump(2) << "\n";
}

double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max(d, std::abs((i + 1.0) / n - f));
        d = std::max(d, std::abs(f - i / n));
    }
    return d;
}

double ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf) {
    if (batch.dim != 1) throw std::invalid_argument("ks_statistic: scalar batches only");
    return ks_statistic(std::span<const double>(batch.values), cdf);
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] <= sb[j]) {
            ++i;
        } else {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / sa.size() -
                                 static_cast<double>(j) / sb.size()));
    }
    return d;
}

std::complex<double> ecf(std::span<const double> sample, double theta) {
    std::complex<double> acc{0.0, 0.0};
    for (double x : sample) acc += std::complex<double>{std::cos(theta * x), std::sin(theta * x)};
    return acc / static_cast<double>(sample.size());
}

}  // namespace gstable
