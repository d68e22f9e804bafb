#ifndef FRACSDE_STATS_HPP
#define FRACSDE_STATS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "fracsde/errors.hpp"

namespace fracsde {

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t n = 0;
};

inline MeanStderr mean_stderr(const std::vector<double>& x) {
    if (x.size() < 2) throw stats_error("mean_stderr: need at least 2 samples");
    double m = 0.0;
    for (double v : x) m += v;
    m /= x.size();
    double s2 = 0.0;
    for (double v : x) s2 += (v - m) * (v - m);
    s2 /= (x.size() - 1);
    return {m, std::sqrt(s2 / x.size()), x.size()};
}

// Sample variance of a centered quantity together with the standard error
// of the variance estimate (uses the empirical fourth moment, valid
// beyond the Gaussian case).
struct VarStderr {
    double var = 0.0;
    double stderr_ = 0.0;
    std::size_t n = 0;
};

inline VarStderr variance_stderr(const std::vector<double>& x) {
    if (x.size() < 8) throw stats_error("variance_stderr: too few samples");
    const std::size_t n = x.size();
    double m = 0.0;
    for (double v : x) m += v;
    m /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m4 /= n;
    const double var = m2 * n / (n - 1);
    const double se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
    return {var, se, n};
}

// Least-squares slope of y against x.
inline double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw stats_error("regression_slope: degenerate input");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= x.size();
    my /= y.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw stats_error("regression_slope: constant abscissa");
    return sxy / sxx;
}

// Standardized skewness and excess kurtosis with their null (Gaussian)
// z-scores; used as non-Gaussianity witnesses.
struct MomentTest {
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    double z_skew = 0.0;
    double z_kurt = 0.0;
};

inline MomentTest moment_test(const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (n < 32) throw stats_error("moment_test: too few samples");
    double m = 0.0;
    for (double v : x) m += v;
    m /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - m;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n; m3 /= n; m4 /= n;
    MomentTest r;
    r.skewness = m3 / std::pow(m2, 1.5);
    r.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    r.z_skew = r.skewness / std::sqrt(6.0 / n);
    r.z_kurt = r.excess_kurtosis / std::sqrt(24.0 / n);
    return r;
}

inline double sample_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw stats_error("sample_correlation: degenerate input");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= x.size(); my /= y.size();
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace fracsde

#endif
