#include "fracsde/qnoise.hpp"

#include <cmath>
#include <limits>

#include "fracsde/noise1d.hpp"
#include "fracsde/rng.hpp"

namespace fracsde {

double QSpec::lambda(int j) const {
    if (j < 1) throw config_error("QSpec: eigenvalue index is 1-based");
    if (!lambdas.empty()) {
        if (j > static_cast<int>(lambdas.size()))
            throw config_error("QSpec: eigenvalue index beyond explicit list");
        return lambdas[j - 1];
    }
    return std::pow(static_cast<double>(j), -r);
}

void QSpec::validate() const {
    if (J < 1) throw config_error("QSpec: J >= 1 required");
    if (lambdas.empty()) {
        if (!(r > 1.0)) throw config_error("QSpec: need r > 1 for a nuclear Q");
    } else {
        if (static_cast<int>(lambdas.size()) < J)
            throw config_error("QSpec: fewer explicit eigenvalues than J");
        double prev = std::numeric_limits<double>::infinity();
        for (double l : lambdas) {
            if (!(l > 0.0) || l > prev)
                throw config_error("QSpec: eigenvalues must be positive and nonincreasing");
            prev = l;
        }
    }
}

TraceInfo trace(const QSpec& q) {
    q.validate();
    TraceInfo t;
    for (int j = 1; j <= q.J; ++j) t.partial += q.lambda(j);
    if (q.lambdas.empty()) {
        // Euler-Maclaurin for sum_{j>J} j^{-r}:
        //   int_{J+1}^inf + f(J+1)/2 - f'(J+1)/12
        const double a = q.J + 1.0, r = q.r;
        t.tail = std::pow(a, 1.0 - r) / (r - 1.0) + 0.5 * std::pow(a, -r) +
                 r / 12.0 * std::pow(a, -r - 1.0);
    }
    return t;
}

Eigen::VectorXd qnoise_basis_vector(QSpec::Basis basis, int j, int dim) {
    if (j < 1 || j > dim)
        throw config_error("qnoise: mode index exceeds available basis size");
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    if (basis == QSpec::Basis::canonical) {
        e(j - 1) = 1.0;
    } else {
        // DST-I basis, exactly orthonormal for the Euclidean inner product
        const double norm = std::sqrt(2.0 / (dim + 1.0));
        for (int i = 0; i < dim; ++i)
            e(i) = norm * std::sin(j * M_PI * (i + 1.0) / (dim + 1.0));
    }
    return e;
}

VectorNoisePath sample_qnoise(const CovarianceKernel& kernel, const QSpec& q,
                              const TimeGrid& grid, int dim, std::uint64_t seed,
                              int m_inner) {
    q.validate();
    kernel.validate();
    if (q.J > dim)
        throw config_error("sample_qnoise: truncation J exceeds the basis size");

    PathSampler sampler(kernel, grid, m_inner);

    VectorNoisePath X;
    X.grid = grid;
    X.seed = seed;
    X.hurst = kernel.hurst_index();
    X.values = Eigen::MatrixXd::Zero(grid.n + 1, dim);
    for (int j = 1; j <= q.J; ++j) {
        const NoisePath x = sampler.sample(derive_seed(seed, j));
        const Eigen::VectorXd e = qnoise_basis_vector(q.basis, j, dim);
        const double s = std::sqrt(q.lambda(j));
        for (int i = 1; i <= grid.n; ++i) X.values.row(i) += s * x.values[i] * e.transpose();
    }
    return X;
}

} // namespace fracsde
