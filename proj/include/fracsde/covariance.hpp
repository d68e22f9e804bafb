#ifndef FRACSDE_COVARIANCE_HPP
#define FRACSDE_COVARIANCE_HPP

#include <string>

#include "fracsde/errors.hpp"

namespace fracsde {

enum class NoiseFamily { fbm, bifbm, hermite };

std::string to_string(NoiseFamily f);
NoiseFamily family_from_string(const std::string& s);

// Covariance kernel of a scalar driving process.  fbm and hermite share
// the fractional Brownian covariance (Hurst H); bifbm carries the extra
// exponent K with the standing assumption 2HK > 1.
struct CovarianceKernel {
    NoiseFamily family = NoiseFamily::fbm;
    double H = 0.7;
    double K = 1.0; // bifbm only
    int q = 1;      // hermite chaos order

    static CovarianceKernel fbm(double H);
    static CovarianceKernel bifbm(double H, double K);
    static CovarianceKernel hermite(double H, int q);

    // Self-similarity index: H for fbm/hermite, HK for bifbm.  This is the
    // exponent every regularity statement is phrased in.
    double hurst_index() const { return family == NoiseFamily::bifbm ? H * K : H; }

    void validate() const;
};

// Assumption-1 decomposition |d2R/dsdt| <= c1 |t-s|^{2H-2} + c2 (st)^beta.
// c2 == 0 means "no g term"; beta is then a -1/2 placeholder that
// consumers must ignore.
struct CovarianceBound {
    double c1 = 0.0;
    double c2 = 0.0;
    double Hbound = 0.7;
    double beta = -0.5;
};

// R(s,t) per the family's closed form.
double cov(const CovarianceKernel& k, double s, double t);

// Mixed second derivative d2R/dsdt away from the diagonal.
//   fbm/hermite:  H(2H-1) |t-s|^{2H-2}
//   bifbm:        4H^2K(K-1)/2^K (s^{2H}+t^{2H})^{K-2} (st)^{2H-1}
//                 + 2HK(2HK-1)/2^K |t-s|^{2HK-2}
// (Both carry the covariance's 2^{-K} prefactor; with it the density
// integrates back to R and matches central finite differences, and K=1
// collapses to the fbm density.)
double cov_density(const CovarianceKernel& k, double s, double t);

// Assumption-1 constants for the family.
CovarianceBound default_bound(const CovarianceKernel& k);

} // namespace fracsde

#endif
