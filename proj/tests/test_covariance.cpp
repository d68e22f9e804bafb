#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "fracsde/covariance.hpp"
#include "fracsde/rng.hpp"

using namespace fracsde;

namespace {

// independent oracle: central second mixed finite difference of cov
double fd_density(const CovarianceKernel& k, double s, double t, double e = 1e-4) {
    return (cov(k, s + e, t + e) - cov(k, s + e, t - e) - cov(k, s - e, t + e) +
            cov(k, s - e, t - e)) /
           (4 * e * e);
}

// independent oracle: 2-D quadrature of the density over [0,t]^2, done as
// 2 int_0^t du int_0^u rho dv with a mesh graded toward the diagonal
double density_square_integral(const CovarianceKernel& k, double t) {
    const int Mu = 400, Mv = 60;
    const double grade = 4.0;
    double total = 0.0;
    for (int a = 0; a < Mu; ++a) {
        const double u = (a + 0.5) * t / Mu;
        double inner = 0.0, off_prev = 0.0;
        for (int j = 1; j <= Mv; ++j) {
            const double off = u * std::pow(static_cast<double>(j) / Mv, grade);
            const double v = u - 0.5 * (off + off_prev);
            if (v > 0.0 && v < u) inner += (off - off_prev) * cov_density(k, u, v);
            off_prev = off;
        }
        total += inner * t / Mu;
    }
    return 2.0 * total;
}

} // namespace

TEST_CASE("closed-form covariances") {
    const CovarianceKernel fbm7 = CovarianceKernel::fbm(0.7);
    CHECK(cov(fbm7, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(cov(fbm7, 1.0, 2.0) == doctest::Approx(0.5 * (1.0 + std::pow(2.0, 1.4) - 1.0)));

    // K = 1 bifbm is fbm
    const CovarianceKernel bi1 = CovarianceKernel::bifbm(0.7, 1.0);
    CHECK(cov(bi1, 0.3, 0.8) == doctest::Approx(cov(fbm7, 0.3, 0.8)).epsilon(1e-14));

    // hermite covariance identical to fbm
    const CovarianceKernel her = CovarianceKernel::hermite(0.7, 2);
    CHECK(cov(her, 0.4, 0.9) == doctest::Approx(cov(fbm7, 0.4, 0.9)).epsilon(1e-14));
}

TEST_CASE("parameter domains") {
    CHECK_THROWS_AS(CovarianceKernel::fbm(1.2), config_error);
    CHECK_THROWS_AS(CovarianceKernel::fbm(0.3), config_error);
    CHECK_THROWS_AS(CovarianceKernel::hermite(0.5, 2), config_error);
    CHECK_THROWS_AS(CovarianceKernel::bifbm(0.6, 0.5), config_error); // 2HK = 0.6
    CHECK_NOTHROW(CovarianceKernel::fbm(0.5));                        // Brownian reference
    CHECK_THROWS_AS(cov_density(CovarianceKernel::fbm(0.5), 0.1, 0.4), config_error);
    CHECK_THROWS_AS(cov_density(CovarianceKernel::fbm(0.7), 0.4, 0.4), numerical_error);
}

TEST_CASE("density matches finite differences") {
    // spec example point, oracle = central FD of cov at step 1e-4
    const CovarianceKernel k75 = CovarianceKernel::fbm(0.75);
    const double fd = fd_density(k75, 0.2, 0.7);
    CHECK(std::abs(cov_density(k75, 0.2, 0.7) - fd) < 1e-3 * std::abs(fd));

    // sweep off-diagonal points for all families
    for (const auto& k : {CovarianceKernel::fbm(0.65), CovarianceKernel::bifbm(0.8, 0.75),
                          CovarianceKernel::hermite(0.7, 2)}) {
        for (double s : {0.15, 0.45, 0.8})
            for (double t : {0.25, 0.6, 0.95}) {
                if (std::abs(s - t) <= 0.05) continue;
                const double fd2 = fd_density(k, s, t);
                CHECK(std::abs(cov_density(k, s, t) - fd2) < 1e-3 * std::abs(fd2));
            }
    }

    // K = 1 kills the R1 term
    const CovarianceKernel bi1 = CovarianceKernel::bifbm(0.7, 1.0);
    const CovarianceKernel fbm7 = CovarianceKernel::fbm(0.7);
    CHECK(cov_density(bi1, 0.3, 0.9) ==
          doctest::Approx(cov_density(fbm7, 0.3, 0.9)).epsilon(1e-13));
}

TEST_CASE("density integrates back to the covariance") {
    // R vanishes on the axes, so int_{[0,t]^2} d2R = R(t,t)
    const CovarianceKernel fbm7 = CovarianceKernel::fbm(0.7);
    CHECK(density_square_integral(fbm7, 0.8) == doctest::Approx(cov(fbm7, 0.8, 0.8)).epsilon(2e-3));

    const CovarianceKernel bi = CovarianceKernel::bifbm(0.8, 0.75);
    CHECK(density_square_integral(bi, 0.8) == doctest::Approx(cov(bi, 0.8, 0.8)).epsilon(5e-3));
}

TEST_CASE("symmetry and axis vanishing") {
    Rng rng(99);
    for (const auto& k : {CovarianceKernel::fbm(0.7), CovarianceKernel::bifbm(0.8, 0.75),
                          CovarianceKernel::hermite(0.6, 2)}) {
        for (int i = 0; i < 1000; ++i) {
            const double s = rng.uniform01() * 2.0, t = rng.uniform01() * 2.0;
            CHECK(cov(k, s, t) == cov(k, t, s));
        }
        CHECK(cov(k, 0.7, 0.0) == 0.0);
        CHECK(cov(k, 0.0, 1.3) == 0.0);
        CHECK(cov(k, 0.5, 0.5) > 0.0);
    }
}

TEST_CASE("Gram matrices are numerically PSD") {
    for (const auto& k : {CovarianceKernel::fbm(0.6), CovarianceKernel::fbm(0.9),
                          CovarianceKernel::bifbm(0.8, 0.75)}) {
        const int n = 200;
        Eigen::MatrixXd G(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                G(i, j) = cov(k, (i + 1.0) / n, (j + 1.0) / n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
        CHECK(es.eigenvalues().minCoeff() >= -1e-8 * G.trace());
    }
}

TEST_CASE("Assumption-1 bound decomposition") {
    {
        const CovarianceBound b = default_bound(CovarianceKernel::fbm(0.8));
        CHECK(b.c1 == doctest::Approx(1.6 * 0.6));
        CHECK(b.c2 == 0.0);
        CHECK(b.Hbound == doctest::Approx(0.8));
    }
    {
        const CovarianceBound b = default_bound(CovarianceKernel::bifbm(0.8, 0.75));
        CHECK(b.beta == doctest::Approx(-0.4));
        CHECK(b.Hbound == doctest::Approx(0.6));
        CHECK(b.c1 > 0.0);
        CHECK(b.c2 > 0.0);
    }
    // numeric sweep: |density| <= c1 |t-s|^{2Hb-2} + c2 (st)^beta off-diagonal
    for (const auto& k : {CovarianceKernel::fbm(0.7), CovarianceKernel::bifbm(0.8, 0.75),
                          CovarianceKernel::hermite(0.65, 2)}) {
        const CovarianceBound b = default_bound(k);
        for (int i = 1; i <= 50; ++i)
            for (int j = 1; j <= 50; ++j) {
                if (i == j) continue;
                const double s = i / 50.0, t = j / 50.0;
                const double bound = b.c1 * std::pow(std::abs(t - s), 2 * b.Hbound - 2) +
                                     (b.c2 > 0 ? b.c2 * std::pow(s * t, b.beta) : 0.0);
                CHECK(std::abs(cov_density(k, s, t)) <= bound * (1 + 1e-12));
            }
    }
}
