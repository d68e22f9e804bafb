#ifndef FRACSDE_QNOISE_HPP
#define FRACSDE_QNOISE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "fracsde/covariance.hpp"
#include "fracsde/grid.hpp"

namespace fracsde {

// Nuclear covariance operator Q: eigenvalues lambda_j (default j^{-r}),
// truncation level J, and the orthonormal basis the modes ride on.
struct QSpec {
    enum class Basis { canonical, sine };

    double r = 2.0;
    std::vector<double> lambdas; // explicit eigenvalues, overrides r when set
    int J = 32;
    Basis basis = Basis::canonical;

    double lambda(int j) const; // 1-based
    void validate() const;
};

struct TraceInfo {
    double partial = 0.0; // sum_{j<=J} lambda_j
    double tail = 0.0;    // analytic tail estimate for the j^{-r} law
    double total() const { return partial + tail; }
};

// Truncated trace plus an Euler-Maclaurin tail estimate (zero tail for
// explicit eigenvalue lists).
TraceInfo trace(const QSpec& q);

// X_t = sum_{j<=J} sqrt(lambda_j) x_j(t) e_j in R^dim.
struct VectorNoisePath {
    TimeGrid grid;
    Eigen::MatrixXd values; // (n+1) x dim, row 0 zero
    double hurst = 0.0;     // driver self-similarity index (H or HK)
    std::uint64_t seed = 0;
};

// Orthonormal basis vector j (1-based) in R^dim for the selector.
Eigen::VectorXd qnoise_basis_vector(QSpec::Basis basis, int j, int dim);

// J independent scalar paths (derived seeds) combined over the basis.
// m_inner only matters for hermite kernels.
VectorNoisePath sample_qnoise(const CovarianceKernel& kernel, const QSpec& q,
                              const TimeGrid& grid, int dim, std::uint64_t seed,
                              int m_inner = 0);

} // namespace fracsde

#endif
