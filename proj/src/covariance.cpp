#include "fracsde/covariance.hpp"

#include <cmath>

namespace fracsde {

std::string to_string(NoiseFamily f) {
    switch (f) {
        case NoiseFamily::fbm: return "fbm";
        case NoiseFamily::bifbm: return "bifbm";
        case NoiseFamily::hermite: return "hermite";
    }
    return "?";
}

NoiseFamily family_from_string(const std::string& s) {
    if (s == "fbm") return NoiseFamily::fbm;
    if (s == "bifbm") return NoiseFamily::bifbm;
    if (s == "hermite") return NoiseFamily::hermite;
    throw config_error("unknown noise family '" + s + "' (expected fbm|bifbm|hermite)");
}

CovarianceKernel CovarianceKernel::fbm(double H) {
    CovarianceKernel k;
    k.family = NoiseFamily::fbm;
    k.H = H;
    k.validate();
    return k;
}

CovarianceKernel CovarianceKernel::bifbm(double H, double K) {
    CovarianceKernel k;
    k.family = NoiseFamily::bifbm;
    k.H = H;
    k.K = K;
    k.validate();
    return k;
}

CovarianceKernel CovarianceKernel::hermite(double H, int q) {
    CovarianceKernel k;
    k.family = NoiseFamily::hermite;
    k.H = H;
    k.q = q;
    k.validate();
    return k;
}

void CovarianceKernel::validate() const {
    switch (family) {
        case NoiseFamily::fbm:
            // H = 1/2 (Brownian motion) is admitted as the reference case for
            // sampling and closed-form covariances; the density machinery
            // requires H > 1/2 and checks separately.
            if (!(H >= 0.5 && H < 1.0))
                throw config_error("fbm requires H in [1/2, 1)");
            break;
        case NoiseFamily::hermite:
            if (!(H > 0.5 && H < 1.0))
                throw config_error("hermite requires H in (1/2, 1)");
            if (q < 1) throw config_error("hermite requires chaos order q >= 1");
            break;
        case NoiseFamily::bifbm:
            if (!(H > 0.0 && H < 1.0) || !(K > 0.0 && K <= 1.0))
                throw config_error("bifbm requires H in (0,1), K in (0,1]");
            if (!(2.0 * H * K > 1.0))
                throw config_error("bifbm requires 2HK > 1");
            break;
    }
}

static double fbm_cov(double H, double s, double t) {
    return 0.5 * (std::pow(s, 2 * H) + std::pow(t, 2 * H) - std::pow(std::abs(s - t), 2 * H));
}

double cov(const CovarianceKernel& k, double s, double t) {
    k.validate();
    if (s < 0.0 || t < 0.0) throw config_error("cov: times must be nonnegative");
    switch (k.family) {
        case NoiseFamily::fbm:
        case NoiseFamily::hermite:
            return fbm_cov(k.H, s, t);
        case NoiseFamily::bifbm: {
            const double a = std::pow(s, 2 * k.H) + std::pow(t, 2 * k.H);
            return (std::pow(a, k.K) - std::pow(std::abs(s - t), 2 * k.H * k.K)) /
                   std::pow(2.0, k.K);
        }
    }
    return 0.0;
}

double cov_density(const CovarianceKernel& k, double s, double t) {
    k.validate();
    if (s == t) throw numerical_error("cov_density: singular on the diagonal");
    if (s < 0.0 || t < 0.0) throw config_error("cov_density: times must be nonnegative");
    const double H = k.H;
    switch (k.family) {
        case NoiseFamily::fbm:
        case NoiseFamily::hermite:
            if (!(H > 0.5)) throw config_error("cov_density: requires H > 1/2");
            return H * (2 * H - 1) * std::pow(std::abs(t - s), 2 * H - 2);
        case NoiseFamily::bifbm: {
            const double K = k.K;
            const double twoK = std::pow(2.0, K);
            const double r1 = 4 * H * H * K * (K - 1) / twoK *
                              std::pow(std::pow(s, 2 * H) + std::pow(t, 2 * H), K - 2) *
                              std::pow(s * t, 2 * H - 1);
            const double r2 = 2 * H * K * (2 * H * K - 1) / twoK *
                              std::pow(std::abs(t - s), 2 * H * K - 2);
            return r1 + r2;
        }
    }
    return 0.0;
}

CovarianceBound default_bound(const CovarianceKernel& k) {
    k.validate();
    CovarianceBound b;
    switch (k.family) {
        case NoiseFamily::fbm:
        case NoiseFamily::hermite:
            b.c1 = 2 * k.H * (2 * k.H - 1);
            b.c2 = 0.0;
            b.Hbound = k.H;
            b.beta = -0.5; // placeholder, no g term
            break;
        case NoiseFamily::bifbm: {
            const double H = k.H, K = k.K;
            b.Hbound = H * K;
            b.beta = H * K - 1.0;
            // |R2 density| = 2HK(2HK-1)/2^K |t-s|^{2HK-2} exactly, and
            // |R1 density| <= H^2 K (1-K) (st)^{HK-1} via
            // (s^{2H}+t^{2H})^{K-2} <= 2^{K-2} (st)^{H(K-2)}.
            b.c1 = 2 * H * K * (2 * H * K - 1) / std::pow(2.0, K);
            b.c2 = H * H * K * (1.0 - K);
            if (b.c2 == 0.0) b.beta = -0.5; // K = 1: no g term
            break;
        }
    }
    return b;
}

} // namespace fracsde
