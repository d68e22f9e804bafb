#include "fracsde/noise1d.hpp"

#include <algorithm>
#include <cmath>

namespace fracsde {

FbmKernelSpec::FbmKernelSpec(double Hp) : Hprime(Hp) {
    if (!(Hp > 0.5 && Hp < 1.0))
        throw config_error("FbmKernelSpec: H' must lie in (1/2,1)");
    c = std::sqrt(Hp * (2 * Hp - 1) / std::beta(2 - 2 * Hp, Hp - 0.5));
}

FbmKernelSpec FbmKernelSpec::for_hermite(double H, int q) {
    if (!(H > 0.5 && H < 1.0)) throw config_error("hermite kernel: H in (1/2,1)");
    if (q < 1) throw config_error("hermite kernel: q >= 1");
    return FbmKernelSpec(1.0 + (H - 1.0) / q);
}

double kernel_derivative(const FbmKernelSpec& spec, double u, double y) {
    if (!(0.0 < y && y < u)) throw config_error("kernel_derivative: requires 0 < y < u");
    return spec.c * std::pow(y / u, 0.5 - spec.Hprime) *
           std::pow(u - y, spec.Hprime - 1.5);
}

// ---------------------------------------------------------------------------
// Gaussian families: dense Cholesky of the covariance Gram matrix.

GaussianSampler::GaussianSampler(const CovarianceKernel& kernel, const TimeGrid& grid)
    : kernel_(kernel), grid_(grid) {
    if (kernel.family == NoiseFamily::hermite)
        throw config_error("GaussianSampler: use HermiteSampler for the hermite family");
    const int n = grid.n;
    Eigen::MatrixXd G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const double v = cov(kernel, grid.point(i + 1), grid.point(j + 1));
            G(i, j) = v;
            G(j, i) = v;
        }
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success) {
        // retry once with the PSD round-off jitter 1e-8 * trace / n
        const double jitter = 1e-8 * G.trace() / n;
        G.diagonal().array() += jitter;
        llt.compute(G);
        if (llt.info() != Eigen::Success)
            throw numerical_error("GaussianSampler: Gram matrix not numerically PSD");
    }
    chol_ = llt.matrixL();
}

NoisePath GaussianSampler::sample(std::uint64_t seed) const {
    const int n = grid_.n;
    Rng rng(seed);
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z(i) = rng.normal();
    Eigen::VectorXd x = chol_.triangularView<Eigen::Lower>() * z;
    NoisePath p;
    p.grid = grid_;
    p.kernel = kernel_;
    p.seed = seed;
    p.values.resize(n + 1);
    p.values[0] = 0.0;
    for (int i = 0; i < n; ++i) p.values[i + 1] = x(i);
    return p;
}

NoisePath sample_gaussian(const CovarianceKernel& kernel, const TimeGrid& grid,
                          std::uint64_t seed) {
    return GaussianSampler(kernel, grid).sample(seed);
}

// ---------------------------------------------------------------------------
// Hermite sampler.

namespace {
// 3-point Gauss-Legendre on (0,1)
const double kG3Node[3] = {0.1127016653792583, 0.5, 0.8872983346207417};
const double kG3Weight[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
} // namespace

// Cell-averaged kernel value: psi(u,k) = (1/delta) int_{cell k, y < u}
// d1K(u,y) dy.  The singular factor (u-y)^{H'-3/2} is integrated exactly;
// the smooth factor y^{1/2-H'} is frozen at the (u-y)^{beta}-weighted
// centroid of the cell.  Partial coverage of the cell containing u is what
// keeps the lifted kernel bounded in u.
double HermiteSampler::psi_avg(double u, int k, double d0p1, double d1p1, double d0p2,
                               double d1p2) const {
    const double beta = Hp_ - 1.5;
    const double I0 = (d0p1 - d1p1) / (beta + 1.0);
    const double I1 = (d0p2 - d1p2) / (beta + 2.0);
    const double ystar = u - I1 / I0;
    (void)k;
    return spec_.c * std::pow(u, Hp_ - 0.5) * std::pow(ystar, 0.5 - Hp_) * I0 / delta_;
}

void HermiteSampler::psi_row(double u, double* row, int act) const {
    // boundaries b_j = j delta; powers shared between neighbouring cells
    const double beta = Hp_ - 1.5;
    double d1 = u - act * delta_;
    if (d1 < 0.0) d1 = 0.0; // partial top cell
    double d1p1 = std::pow(d1, beta + 1.0), d1p2 = std::pow(d1, beta + 2.0);
    for (int k = act - 1; k >= 0; --k) {
        const double d0 = u - k * delta_;
        const double d0p1 = std::pow(d0, beta + 1.0), d0p2 = std::pow(d0, beta + 2.0);
        row[k] = psi_avg(u, k, d0p1, d1p1, d0p2, d1p2);
        d1p1 = d0p1;
        d1p2 = d0p2;
    }
}

HermiteSampler::HermiteSampler(double H, int q, const TimeGrid& grid, int m_inner)
    : H_(H), q_(q), grid_(grid), spec_(FbmKernelSpec::for_hermite(H, q)) {
    Hp_ = spec_.Hprime;
    if (q < 1) throw config_error("HermiteSampler: q >= 1 required");
    if (q > 2) throw config_error("HermiteSampler: q > 2 unsupported (validated range is {1,2})");
    if (m_inner < 2 * grid.n)
        throw config_error("HermiteSampler: m_inner must be at least 2n (resolution)");
    // inner cells must subdivide the outer grid
    m_ = (m_inner / grid.n) * grid.n;
    if (m_ < m_inner) m_ += grid.n;
    delta_ = 1.0 / m_;

    y_.resize(m_);
    for (int k = 0; k < m_; ++k) y_[k] = (k + 0.5) * delta_;

    // u-quadrature: 3-point Gauss per inner cell.  With the cell-averaged
    // kernel the integrand is bounded (mild Hoelder kinks at cell
    // boundaries only), so no grading is needed.  For u inside cell c the
    // active cells are k = 0..c, the top one covered partially.
    const int per_outer = m_ / grid.n;
    outer_node_end_.assign(grid.n + 1, 0);
    for (int c = 0; c < m_; ++c) {
        for (int g = 0; g < 3; ++g) {
            unode_u_.push_back((c + kG3Node[g]) * delta_);
            unode_w_.push_back(delta_ * kG3Weight[g]);
            unode_act_.push_back(c + 1);
        }
        if ((c + 1) % per_outer == 0)
            outer_node_end_[(c + 1) / per_outer] = static_cast<int>(unode_u_.size());
    }

    const std::size_t nn = unode_u_.size();
    phi_off_.resize(nn + 1);
    phi_off_[0] = 0;
    for (std::size_t g = 0; g < nn; ++g) phi_off_[g + 1] = phi_off_[g] + unode_act_[g];
    phi_.resize(phi_off_[nn]);
    diag_q_.resize(nn);
    for (std::size_t g = 0; g < nn; ++g) {
        double* row = phi_.data() + phi_off_[g];
        psi_row(unode_u_[g], row, unode_act_[g]);
        double s = 0.0;
        for (int k = 0; k < unode_act_[g]; ++k) s += row[k] * row[k];
        diag_q_[g] = delta_ * s;
    }

    if (q_ == 1) {
        // cumulative first-order coefficients, snapshot per outer time
        coef1_ = Eigen::MatrixXd::Zero(grid.n + 1, m_);
        Eigen::RowVectorXd run = Eigen::RowVectorXd::Zero(m_);
        std::size_t g = 0;
        for (int i = 1; i <= grid.n; ++i) {
            for (; g < static_cast<std::size_t>(outer_node_end_[i]); ++g) {
                const double* row = phi_.data() + phi_off_[g];
                for (int k = 0; k < unode_act_[g]; ++k) run(k) += unode_w_[g] * row[k];
            }
            coef1_.row(i) = run;
        }
    }

    d_ = compute_normalization();
}

std::vector<double> HermiteSampler::inner_increments(std::uint64_t seed) const {
    Rng rng(seed);
    std::vector<double> dW(m_);
    const double s = std::sqrt(delta_);
    for (int k = 0; k < m_; ++k) dW[k] = s * rng.normal();
    return dW;
}

std::vector<double> HermiteSampler::chaos_values(const std::vector<double>& dW,
                                                 const std::vector<double>* f_at_unodes) const {
    if (static_cast<int>(dW.size()) != m_)
        throw config_error("chaos_values: increment count mismatch");
    const int n = grid_.n;
    std::vector<double> out(n + 1, 0.0);
    if (q_ == 1) {
        Eigen::Map<const Eigen::VectorXd> w(dW.data(), m_);
        for (int i = 1; i <= n; ++i) {
            double z = 0.0;
            if (!f_at_unodes) {
                z = coef1_.row(i).dot(w);
            } else {
                // f-weighted coefficients, built on the fly
                std::vector<double> Bf(m_, 0.0);
                for (std::size_t g = 0; g < static_cast<std::size_t>(outer_node_end_[i]); ++g) {
                    const double* row = phi_.data() + phi_off_[g];
                    const double wf = unode_w_[g] * (*f_at_unodes)[g];
                    for (int k = 0; k < unode_act_[g]; ++k) Bf[k] += wf * row[k];
                }
                for (int k = 0; k < m_; ++k) z += Bf[k] * dW[k];
            }
            out[i] = d_ * z;
        }
        return out;
    }
    // q = 2.  Per quadrature node, (sum_k psi dW_k)^2 - delta sum_k psi^2
    // collects every off-diagonal pair psi psi dW dW plus the diagonal
    // cells through their compensated squares psi^2 (dW^2 - delta): the
    // exact L^2 projection of the continuum Wiener-Ito integral onto the
    // increment sigma-algebra.  Raw diagonal products never enter, so the
    // sum stays centered.
    double acc = 0.0;
    std::size_t g = 0;
    for (int i = 1; i <= n; ++i) {
        for (; g < static_cast<std::size_t>(outer_node_end_[i]); ++g) {
            const double* row = phi_.data() + phi_off_[g];
            const int act = unode_act_[g];
            double L = 0.0;
            for (int k = 0; k < act; ++k) L += row[k] * dW[k];
            const double w = f_at_unodes ? unode_w_[g] * (*f_at_unodes)[g] : unode_w_[g];
            acc += w * (L * L - diag_q_[g]);
        }
        out[i] = d_ * acc;
    }
    return out;
}

NoisePath HermiteSampler::sample(std::uint64_t seed) const {
    const std::vector<double> dW = inner_increments(seed);
    std::vector<double> z = chaos_values(dW);
    // H-self-similar rescaling from [0,1] to [0,T]
    const double scale = std::pow(grid_.T, H_);
    NoisePath p;
    p.grid = grid_;
    p.kernel = CovarianceKernel::hermite(H_, q_);
    p.seed = seed;
    p.values.resize(grid_.n + 1);
    for (int i = 0; i <= grid_.n; ++i) p.values[i] = scale * z[i];
    return p;
}

// The exact second moment of the discretized chaos at t = 1, so the
// sampled process has Var(Z_1) = 1 by construction:
//   q = 1:  Var = delta sum_k B(k)^2
//   q = 2:  Var = 2 delta^2 sum_{k1 != k2} f(k1,k2)^2
// computed from the same quadrature tables the sampler uses.
double HermiteSampler::compute_normalization() const {
    if (q_ == 1) {
        double s = 0.0;
        for (int k = 0; k < m_; ++k) {
            const double b = coef1_(grid_.n, k);
            s += b * b;
        }
        return 1.0 / std::sqrt(delta_ * s);
    }
    // full Frobenius norm: diagonal cells ride on (dW^2 - delta), whose
    // variance is the same 2 delta^2 as an off-diagonal product pair
    const Eigen::MatrixXd f = kernel_table();
    const double nrm2 = 2.0 * delta_ * delta_ * f.squaredNorm();
    if (!(nrm2 > 0.0) || !std::isfinite(nrm2))
        throw numerical_error("HermiteSampler: normalization failed");
    return 1.0 / std::sqrt(nrm2);
}

Eigen::MatrixXd HermiteSampler::kernel_table(const std::vector<double>* f_at_unodes) const {
    if (q_ == 1) {
        Eigen::MatrixXd t(1, m_);
        if (!f_at_unodes) {
            t = coef1_.row(grid_.n);
        } else {
            t.setZero();
            for (std::size_t g = 0; g < unode_u_.size(); ++g) {
                const double* row = phi_.data() + phi_off_[g];
                const double wf = unode_w_[g] * (*f_at_unodes)[g];
                for (int k = 0; k < unode_act_[g]; ++k) t(0, k) += wf * row[k];
            }
        }
        return t;
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m_, m_);
    for (std::size_t g = 0; g < unode_u_.size(); ++g) {
        const double* row = phi_.data() + phi_off_[g];
        const int act = unode_act_[g];
        const double wf = f_at_unodes ? unode_w_[g] * (*f_at_unodes)[g] : unode_w_[g];
        for (int k1 = 0; k1 < act; ++k1) {
            const double a = wf * row[k1];
            for (int k2 = 0; k2 <= k1; ++k2) t(k1, k2) += a * row[k2];
        }
    }
    for (int k1 = 0; k1 < m_; ++k1)
        for (int k2 = k1 + 1; k2 < m_; ++k2) t(k1, k2) = t(k2, k1);
    return t;
}

double normalization_constant(double H, int q, int m_inner) {
    const TimeGrid unit(1.0, 2);
    return HermiteSampler(H, q, unit, std::max(m_inner, 4)).normalization();
}

NoisePath sample_hermite(double H, int q, const TimeGrid& grid, int m_inner,
                         std::uint64_t seed) {
    return HermiteSampler(H, q, grid, m_inner).sample(seed);
}

PathSampler::PathSampler(const CovarianceKernel& kernel, const TimeGrid& grid, int m_inner)
    : kernel_(kernel) {
    if (kernel.family == NoiseFamily::hermite) {
        const int m = m_inner > 0 ? m_inner : 2 * grid.n;
        hermite_ = std::make_shared<HermiteSampler>(kernel.H, kernel.q, grid, m);
    } else {
        gauss_ = std::make_shared<GaussianSampler>(kernel, grid);
    }
}

NoisePath PathSampler::sample(std::uint64_t seed) const {
    return hermite_ ? hermite_->sample(seed) : gauss_->sample(seed);
}

} // namespace fracsde
