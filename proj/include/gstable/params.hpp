#pragma once

// Parameter sets for the stable / Gamma / geometric-stable family.
// All types validate on construction and are immutable afterwards.

namespace gstable {

// Feller pair (gamma_skew, c): skewness angle and spreading rate of a
// strictly stable law.  |gamma_skew| <= min(alpha, 2 - alpha) and c > 0.
struct FellerParams {
    double gamma_skew = 0.0;
    double c = 1.0;
};

// Strictly stable law (alpha, beta, sigma), position fixed to zero.
// alpha = 1 is accepted only in the symmetric case beta = 0; the
// asymmetric log-correction branch is rejected at construction.
class StableParams {
public:
    StableParams(double alpha, double beta, double sigma = 1.0);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double sigma() const { return sigma_; }

private:
    double alpha_;
    double beta_;
    double sigma_;
};

// Rate of the Gamma subordinator; the shape parameter is fixed to 1.
class GammaParams {
public:
    explicit GammaParams(double rate = 1.0);
    double b() const { return b_; }

private:
    double b_;
};

// gamma_skew = (2/pi) atan(-beta tan(pi alpha / 2)), c = sigma^alpha / cos(pi gamma/2).
FellerParams feller_from_params(const StableParams& p);

}  // namespace gstable
