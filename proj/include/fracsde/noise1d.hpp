#ifndef FRACSDE_NOISE1D_HPP
#define FRACSDE_NOISE1D_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "fracsde/covariance.hpp"
#include "fracsde/grid.hpp"
#include "fracsde/rng.hpp"

namespace fracsde {

// One sampled scalar trajectory on a uniform grid, with provenance.
struct NoisePath {
    TimeGrid grid;
    std::vector<double> values; // length n+1, values[0] = 0
    CovarianceKernel kernel;
    std::uint64_t seed = 0;
};

// Fractional Brownian kernel data: K^{H'} enters the Hermite chaos
// representation through its partial derivative
//   d1 K^{H'}(u,y) = c_{H'} (y/u)^{1/2-H'} (u-y)^{H'-3/2},  0 < y < u,
// with c_{H'} = (H'(2H'-1) / Beta(2-2H', H'-1/2))^{1/2}.
struct FbmKernelSpec {
    double Hprime;
    double c;

    explicit FbmKernelSpec(double Hp);
    // H' = 1 + (H-1)/q, so that (2H'-2) q = 2H-2.
    static FbmKernelSpec for_hermite(double H, int q);
};

double kernel_derivative(const FbmKernelSpec& spec, double u, double y);

// Exact Gaussian sampling via dense Cholesky of the Gram matrix on the
// interior grid points.  The factorization is cached, so ensembles reuse it.
class GaussianSampler {
  public:
    GaussianSampler(const CovarianceKernel& kernel, const TimeGrid& grid);
    NoisePath sample(std::uint64_t seed) const;

  private:
    CovarianceKernel kernel_;
    TimeGrid grid_;
    Eigen::MatrixXd chol_; // lower factor, n x n
};

NoisePath sample_gaussian(const CovarianceKernel& kernel, const TimeGrid& grid,
                          std::uint64_t seed);

// Hermite process of order q as a discretized q-fold Wiener-Ito integral:
// inner grid of m_inner cells on [0,1] carrying i.i.d. Brownian increments,
// chaos kernel A_t evaluated at cell midpoints, diagonal terms excluded.
// Weakly singular u-integrals use graded subcells with nodes matched to the
// (u-y)^{H'-3/2} power so the adjacent-cell singularity is integrated
// exactly.  Paths on [0,T] come from H-self-similar rescaling of the unit
// interval.  Supported (validated) orders are q in {1,2}.
class HermiteSampler {
  public:
    HermiteSampler(double H, int q, const TimeGrid& grid, int m_inner);

    NoisePath sample(std::uint64_t seed) const;

    double normalization() const { return d_; }
    int m_inner() const { return m_; }
    int order() const { return q_; }
    double hurst() const { return H_; }
    const TimeGrid& grid() const { return grid_; }

    // Increments of the underlying Wiener process on the inner grid for a
    // given seed; sample(seed) is a deterministic function of these.
    std::vector<double> inner_increments(std::uint64_t seed) const;

    // Discrete multiple Wiener-Ito sum of the chaos kernel weighted by
    // f(u) (f == nullptr means f == 1, which reproduces the process
    // itself), evaluated at the outer grid times of the unit interval.
    // Both the sampler and the transfer-operator cross-check in module
    // wiener run through here, against the same increments.
    std::vector<double> chaos_values(const std::vector<double>& dW,
                                     const std::vector<double>* f_at_unodes = nullptr) const;

    // Quadrature nodes of the u-integration (unit interval).
    const std::vector<double>& u_nodes() const { return unode_u_; }
    const std::vector<double>& u_weights() const { return unode_w_; }
    // Midpoints y_k of the inner cells.
    const std::vector<double>& y_points() const { return y_; }
    // Number of inner cells active (y_k < u) at a u-node.
    int active_count(int g) const { return unode_act_[g]; }

    // Chaos kernel table I(f)(y_{k1},..,y_{kq}) on the inner grid:
    // a vector for q = 1, a symmetric matrix for q = 2.
    Eigen::MatrixXd kernel_table(const std::vector<double>* f_at_unodes = nullptr) const;

  private:
    double H_, Hp_;
    int q_;
    TimeGrid grid_;
    int m_;
    double delta_;
    FbmKernelSpec spec_;
    double d_; // normalization: discretized Var(Z_1) = 1

    std::vector<double> y_;       // midpoints, size m
    std::vector<double> unode_u_; // quadrature nodes, ascending
    std::vector<double> unode_w_;
    std::vector<int> unode_act_;      // active cell count per node
    std::vector<int> outer_node_end_; // node count with u <= i/n, i=0..n

    // cell-averaged kernel table: for node g, psi(u_g, k), k < act(g)
    std::vector<double> phi_;
    std::vector<std::size_t> phi_off_;
    std::vector<double> diag_q_; // delta * sum_k psi(u_g,k)^2 per node

    // q=1 cumulative coefficient table, rows = outer times
    Eigen::MatrixXd coef1_;

    double compute_normalization() const;
    double psi_avg(double u, int k, double d0p1, double d1p1, double d0p2, double d1p2) const;
    void psi_row(double u, double* row, int act) const;
};

// d(H): normalization making the discretized Var(Z_1) equal 1, computed
// deterministically from the kernel's second-moment integral (Wiener-Ito
// isometry), not by Monte Carlo.
double normalization_constant(double H, int q, int m_inner);

NoisePath sample_hermite(double H, int q, const TimeGrid& grid, int m_inner,
                         std::uint64_t seed);

// Family dispatch used by the vector-valued noise assembly.
class PathSampler {
  public:
    PathSampler(const CovarianceKernel& kernel, const TimeGrid& grid, int m_inner = 0);
    NoisePath sample(std::uint64_t seed) const;
    const CovarianceKernel& kernel() const { return kernel_; }

  private:
    CovarianceKernel kernel_;
    std::shared_ptr<GaussianSampler> gauss_;
    std::shared_ptr<HermiteSampler> hermite_;
};

} // namespace fracsde

#endif
