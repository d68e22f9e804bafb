#include "fracsde/convolution.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "fracsde/stats.hpp"

namespace fracsde {

double ConvolutionPath::sup_norm() const {
    double s = 0.0;
    for (int i = 0; i < values.rows(); ++i) {
        double r = 0.0;
        for (int j = 0; j < values.cols(); ++j) r += values(i, j) * values(i, j) * weights(j);
        s = std::max(s, std::sqrt(r));
    }
    return s;
}

ConvolutionPath convolve(const OperatorSpec& spec, const VectorNoisePath& noise) {
    if (noise.values.cols() != spec.dim())
        throw config_error("convolve: noise dimension does not match the operator");
    const TimeGrid& g = noise.grid;
    const Eigen::MatrixXd E = spec.semigroup_matrix(g.dt());

    ConvolutionPath W;
    W.grid = g;
    W.hurst = noise.hurst;
    W.weights = spec.weights();
    W.values = Eigen::MatrixXd::Zero(g.n + 1, spec.dim());
    Eigen::VectorXd cur = Eigen::VectorXd::Zero(spec.dim());
    for (int i = 0; i < g.n; ++i) {
        const Eigen::VectorXd dX = (noise.values.row(i + 1) - noise.values.row(i)).transpose();
        cur = E * (cur + dX);
        W.values.row(i + 1) = cur.transpose();
    }
    return W;
}

namespace {

// Weighted semigroup convolution sum_{k=1..i} w_k e^{k dt A} src_{i-k},
// spectrally when the eigenbasis is well conditioned, otherwise by
// incrementally propagated matrix-vector products.  src rows 0..n-1 are
// left-point values; row i of the result collects lags k = 1..i.
Eigen::MatrixXd semigroup_convolution(const OperatorSpec& spec, double dt,
                                      const std::vector<double>& w,
                                      const Eigen::MatrixXd& src, double gamma_frac) {
    const int n = static_cast<int>(src.rows());
    const int N = spec.dim();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n + 1, N);

    Eigen::EigenSolver<Eigen::MatrixXd> es(spec.matrix());
    const Eigen::MatrixXcd V = es.eigenvectors();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(V);
    if (lu.isInvertible() && lu.rcond() > 1e-10) {
        const Eigen::VectorXcd lam = es.eigenvalues();
        Eigen::MatrixXcd b(n, N);
        for (int j = 0; j < n; ++j)
            b.row(j) = lu.solve(src.row(j).transpose().cast<std::complex<double>>()).transpose();
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n + 1, N);
        for (int m = 0; m < N; ++m) {
            const std::complex<double> pg =
                (gamma_frac == 0.0) ? std::complex<double>(1.0, 0.0)
                                    : std::pow(-lam(m), gamma_frac);
            std::complex<double> e1 = std::exp(lam(m) * dt);
            std::vector<std::complex<double>> ek(n + 1);
            ek[0] = 1.0;
            for (int k = 1; k <= n; ++k) ek[k] = ek[k - 1] * e1;
            for (int i = 1; i <= n; ++i) {
                std::complex<double> s = 0.0;
                for (int k = 1; k <= i; ++k) s += w[k] * ek[k] * b(i - k, m);
                acc(i, m) = pg * s;
            }
        }
        for (int i = 0; i <= n; ++i) out.row(i) = (V * acc.row(i).transpose()).real().transpose();
        return out;
    }

    // direct route
    Eigen::MatrixXd src2 = src;
    if (gamma_frac > 0.0) {
        Eigen::MatrixXd negA = -spec.matrix();
        Eigen::MatrixPower<Eigen::MatrixXd> pw(negA);
        src2 = (pw(gamma_frac) * src.transpose()).transpose();
    }
    const Eigen::MatrixXd E = spec.semigroup_matrix(dt);
    Eigen::MatrixXd Z = src2; // row j holds E^k src_j
    for (int k = 1; k <= n; ++k) {
        for (int j = 0; j + k <= n; ++j) Z.row(j) = (E * Z.row(j).transpose()).transpose();
        for (int j = 0; j + k <= n; ++j) out.row(j + k) += w[k] * Z.row(j);
    }
    return out;
}

} // namespace

// Exact cell integrals of the singular weights, divided by dt so they act
// on left-point values:
//   wY_k = dt^{-alpha}   [k^{1-alpha} - (k-1)^{1-alpha}] / (1-alpha)
//   wR_k = dt^{alpha-1}  [k^alpha     - (k-1)^alpha]     / alpha

Eigen::MatrixXd y_alpha_stage(const OperatorSpec& spec, const VectorNoisePath& noise,
                              double alpha) {
    if (noise.values.cols() != spec.dim())
        throw config_error("y_alpha_stage: noise dimension mismatch");
    const TimeGrid& g = noise.grid;
    const int n = g.n;
    const double dt = g.dt();
    std::vector<double> wY(n + 1, 0.0);
    for (int k = 1; k <= n; ++k)
        wY[k] = std::pow(dt, -alpha) *
                (std::pow(k, 1 - alpha) - std::pow(k - 1.0, 1 - alpha)) / (1 - alpha);
    Eigen::MatrixXd dX(n, spec.dim());
    for (int j = 0; j < n; ++j) dX.row(j) = noise.values.row(j + 1) - noise.values.row(j);
    return semigroup_convolution(spec, dt, wY, dX, 0.0);
}

Eigen::MatrixXd r_alpha_gamma(const OperatorSpec& spec, const TimeGrid& grid, double alpha,
                              double gamma_frac, const Eigen::MatrixXd& psi) {
    if (psi.cols() != spec.dim() || psi.rows() < grid.n)
        throw config_error("r_alpha_gamma: trajectory shape mismatch");
    const int n = grid.n;
    const double dt = grid.dt();
    std::vector<double> wR(n + 1, 0.0);
    for (int k = 1; k <= n; ++k)
        wR[k] = std::pow(dt, alpha - 1) * (std::pow(k, alpha) - std::pow(k - 1.0, alpha)) / alpha;
    const Eigen::MatrixXd r =
        semigroup_convolution(spec, dt, wR, psi.topRows(n), gamma_frac);
    return std::sin(alpha * M_PI) / M_PI * r;
}

ConvolutionPath factorized_convolve(const OperatorSpec& spec, const VectorNoisePath& noise,
                                    const ConvolutionConfig& cfg) {
    cfg.validate(noise.hurst > 0.0 ? noise.hurst : 1.0);
    ConvolutionPath out;
    out.grid = noise.grid;
    out.hurst = noise.hurst;
    out.weights = spec.weights();
    out.y_alpha = y_alpha_stage(spec, noise, cfg.alpha);
    out.values = r_alpha_gamma(spec, noise.grid, cfg.alpha, cfg.gamma_frac, out.y_alpha);
    return out;
}

double holder_estimate(const std::vector<ConvolutionPath>& ensemble, int lag_pow_min,
                       int lag_pow_max) {
    if (ensemble.empty()) throw stats_error("holder_estimate: empty ensemble");
    if (lag_pow_max - lag_pow_min + 1 < 6)
        throw stats_error("holder_estimate: need at least 6 dyadic lags");
    if (ensemble.size() < 1000)
        throw stats_error("holder_estimate: ensemble version needs >= 1000 paths");
    const TimeGrid& g = ensemble.front().grid;
    std::vector<double> lx, ly;
    for (int k = lag_pow_min; k <= lag_pow_max; ++k) {
        const int lag = g.n >> k;
        if (lag < 1 || (g.n % (1 << k)) != 0)
            throw config_error("holder_estimate: grid does not support the dyadic lag range");
        double acc = 0.0;
        std::size_t cnt = 0;
        for (const auto& p : ensemble) {
            for (int i = 0; i + lag <= g.n; i += lag) {
                double r = 0.0;
                for (int j = 0; j < p.values.cols(); ++j) {
                    const double d = p.values(i + lag, j) - p.values(i, j);
                    r += d * d * p.weights(j);
                }
                acc += r;
                ++cnt;
            }
        }
        lx.push_back(std::log(lag * g.dt()));
        ly.push_back(std::log(acc / cnt));
    }
    return 0.5 * regression_slope(lx, ly);
}

double hurst_estimate_path(const TimeGrid& grid, const Eigen::MatrixXd& values,
                           int lag_pow_min, int lag_pow_max) {
    if (lag_pow_max < lag_pow_min) throw stats_error("hurst_estimate_path: empty lag range");
    std::vector<double> lx, ly;
    for (int k = lag_pow_min; k <= lag_pow_max; ++k) {
        const int lag = grid.n >> k;
        if (lag < 1 || (grid.n % (1 << k)) != 0)
            throw config_error("hurst_estimate_path: unsupported lag");
        double acc = 0.0;
        std::size_t cnt = 0;
        for (int i = 0; i + lag <= grid.n; i += lag) {
            double r = 0.0;
            for (int j = 0; j < values.cols(); ++j) {
                const double d = values(i + lag, j) - values(i, j);
                r += d * d;
            }
            acc += r;
            ++cnt;
        }
        if (acc == 0.0) throw stats_error("hurst_estimate_path: degenerate path");
        lx.push_back(std::log(lag * grid.dt()));
        ly.push_back(std::log(acc / cnt));
    }
    return 0.5 * regression_slope(lx, ly);
}

SupMomentReport sup_moment(const std::vector<ConvolutionPath>& ensemble, double p) {
    if (ensemble.empty()) throw stats_error("sup_moment: empty ensemble");
    const double H = ensemble.front().hurst;
    if (H > 0.0 && !(p > 1.0 / H))
        throw config_error("sup_moment: requires p > 1/H");
    std::vector<double> vals;
    vals.reserve(ensemble.size());
    for (const auto& w : ensemble) vals.push_back(std::pow(w.sup_norm(), p));
    const MeanStderr ms = mean_stderr(vals);
    return {ms.mean, ms.stderr_, ms.n};
}

} // namespace fracsde
