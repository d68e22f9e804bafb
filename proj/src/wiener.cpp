#include "fracsde/wiener.hpp"

#include <algorithm>
#include <cmath>

namespace fracsde {

StepFunction::StepFunction(std::vector<double> b, std::vector<double> c)
    : breaks(std::move(b)), coef(std::move(c)) {
    if (breaks.size() < 2 || coef.size() + 1 != breaks.size())
        throw config_error("StepFunction: need k+1 breakpoints for k pieces");
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (!(breaks[i] < breaks[i + 1]))
            throw config_error("StepFunction: breakpoints must increase strictly");
    if (breaks.front() < 0.0) throw config_error("StepFunction: negative time");
}

StepFunction StepFunction::indicator(double a, double b, double T) {
    if (!(0.0 <= a && a < b && b <= T)) throw config_error("indicator: need 0 <= a < b <= T");
    std::vector<double> br, cf;
    if (a > 0.0) { br.push_back(0.0); cf.push_back(0.0); }
    br.push_back(a); cf.push_back(1.0);
    br.push_back(b);
    if (b < T) { cf.push_back(0.0); br.push_back(T); }
    return StepFunction(br, cf);
}

double StepFunction::operator()(double u) const {
    if (u < breaks.front() || u >= breaks.back())
        return 0.0;
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - breaks.begin()) - 1;
    return coef[std::min(i, coef.size() - 1)];
}

Integrand::Integrand(StepFunction sf) : is_step_(true), sf_(std::move(sf)) {
    bound_ = 0.0;
    for (double c : sf_.coef) bound_ = std::max(bound_, std::abs(c));
}

Integrand::Integrand(std::function<double(double)> f, double bound)
    : is_step_(false), fn_(std::move(f)), bound_(bound) {
    if (!fn_) throw config_error("Integrand: empty callable");
}

const StepFunction& Integrand::step() const {
    if (!is_step_) throw config_error("Integrand: not a step function");
    return sf_;
}

double Integrand::operator()(double u) const { return is_step_ ? sf_(u) : fn_(u); }

// ---------------------------------------------------------------------------
// h_inner: exact power-kernel cell integrals + tensor Gauss for the g part.

namespace {

// kappa'' (x) = |x|^a; rectangle integrals of |u-v|^a come from the
// inclusion-exclusion of kappa at the four corner differences.
inline double kappa(double x, double a) {
    return std::pow(std::abs(x), a + 2.0) / ((a + 1.0) * (a + 2.0));
}

inline double rect_power_integral(double a1, double b1, double a2, double b2, double a) {
    return kappa(b1 - a2, a) + kappa(a1 - b2, a) - kappa(a1 - a2, a) - kappa(b1 - b2, a);
}

std::vector<double> build_partition(const Integrand& f, const Integrand& h, double T,
                                    const QuadratureOptions& opt) {
    std::vector<double> pts;
    const int n = std::max(opt.cells, 8);
    for (int i = 0; i <= n; ++i) pts.push_back(T * i / n);
    // geometric refinement of the first cell (axis singularity of the g part)
    double w = T / n;
    for (int j = 0; j < opt.axis_refine; ++j) {
        w *= 0.5;
        pts.push_back(w);
    }
    auto add_breaks = [&](const Integrand& g) {
        if (!g.is_step()) return;
        for (double b : g.step().breaks)
            if (b > 0.0 && b < T) pts.push_back(b);
    };
    add_breaks(f);
    add_breaks(h);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [T](double x, double y) { return std::abs(x - y) < 1e-14 * T; }),
              pts.end());
    return pts;
}

const double kGauss8Nodes[8] = {-0.9602898564975363, -0.7966664774136267,
                                -0.5255324099163290, -0.1834346424956498,
                                0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975363};
const double kGauss8Weights[8] = {0.1012285362903763, 0.2223810344533745,
                                  0.3137066458778873, 0.3626837833783620,
                                  0.3626837833783620, 0.3137066458778873,
                                  0.2223810344533745, 0.1012285362903763};

} // namespace

double h_inner(const Integrand& f, const Integrand& h, const CovarianceKernel& kernel,
               double T, QuadratureOptions opt) {
    kernel.validate();
    if (!(T > 0.0)) throw config_error("h_inner: need T > 0");
    if (kernel.family != NoiseFamily::bifbm && !(kernel.H > 0.5))
        throw config_error("h_inner: density form requires H > 1/2");

    const std::vector<double> P = build_partition(f, h, T, opt);
    const std::size_t nc = P.size() - 1;

    std::vector<double> fbar(nc), hbar(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        const double mid = 0.5 * (P[i] + P[i + 1]);
        fbar[i] = f(mid);
        hbar[i] = h(mid);
    }

    // power part: c_pow |u-v|^{a_pow}
    double c_pow, a_pow;
    if (kernel.family == NoiseFamily::bifbm) {
        const double H = kernel.H, K = kernel.K;
        c_pow = 2 * H * K * (2 * H * K - 1) / std::pow(2.0, K);
        a_pow = 2 * H * K - 2;
    } else {
        c_pow = kernel.H * (2 * kernel.H - 1);
        a_pow = 2 * kernel.H - 2;
    }

    double total = 0.0;
    for (std::size_t i = 0; i < nc; ++i) {
        if (fbar[i] == 0.0) continue;
        for (std::size_t j = 0; j < nc; ++j) {
            if (hbar[j] == 0.0) continue;
            total += fbar[i] * hbar[j] *
                     rect_power_integral(P[i], P[i + 1], P[j], P[j + 1], a_pow);
        }
    }
    total *= c_pow;

    if (kernel.family == NoiseFamily::bifbm) {
        // smooth R1 density, negative, singular only at the axes
        const double H = kernel.H, K = kernel.K;
        const double c1 = 4 * H * H * K * (K - 1) / std::pow(2.0, K);
        if (c1 != 0.0) {
            double g_part = 0.0;
            for (std::size_t i = 0; i < nc; ++i) {
                if (fbar[i] == 0.0) continue;
                const double mi = 0.5 * (P[i] + P[i + 1]), hi = 0.5 * (P[i + 1] - P[i]);
                for (std::size_t j = 0; j < nc; ++j) {
                    if (hbar[j] == 0.0) continue;
                    const double mj = 0.5 * (P[j] + P[j + 1]), hj = 0.5 * (P[j + 1] - P[j]);
                    double cell = 0.0;
                    for (int a = 0; a < 8; ++a) {
                        const double u = mi + hi * kGauss8Nodes[a];
                        const double su = std::pow(u, 2 * H);
                        double row = 0.0;
                        for (int b = 0; b < 8; ++b) {
                            const double v = mj + hj * kGauss8Nodes[b];
                            row += kGauss8Weights[b] *
                                   std::pow(su + std::pow(v, 2 * H), K - 2) *
                                   std::pow(u * v, 2 * H - 1);
                        }
                        cell += kGauss8Weights[a] * row;
                    }
                    g_part += fbar[i] * hbar[j] * hi * hj * cell;
                }
            }
            total += c1 * g_part;
        }
    }
    return total;
}

double h_norm_sq(const Integrand& f, const CovarianceKernel& kernel, double T,
                 QuadratureOptions opt) {
    QuadratureOptions o1 = opt, o2 = opt, o3 = opt;
    o2.cells = opt.cells * 2;
    o3.cells = opt.cells * 4;
    const double v1 = h_inner(f, f, kernel, T, o1);
    const double v2 = h_inner(f, f, kernel, T, o2);
    const double v3 = h_inner(f, f, kernel, T, o3);
    const double d12 = std::abs(v2 - v1), d23 = std::abs(v3 - v2);
    const double scale = std::max({std::abs(v3), 1e-12});
    // Cauchy under refinement: successive increments must not grow and the
    // last one must be small relative to the value.
    if (!std::isfinite(v3) || (d23 > 0.75 * d12 && d23 > 0.05 * scale) || d23 > 0.5 * scale)
        throw numerical_error("h_norm_sq: not Cauchy under refinement (f not in |H|)");
    return v3;
}

// ---------------------------------------------------------------------------

double wiener_integral_step(const StepFunction& f, const NoisePath& path) {
    const TimeGrid& g = path.grid;
    double acc = 0.0;
    for (std::size_t i = 0; i < f.coef.size(); ++i) {
        if (f.coef[i] == 0.0) continue;
        const int a = g.snap(f.breaks[i]);
        const int b = g.snap(f.breaks[i + 1]);
        acc += f.coef[i] * (path.values[b] - path.values[a]);
    }
    return acc;
}

double wiener_integral_fn(const Integrand& f, const NoisePath& path) {
    if (f.is_step()) return wiener_integral_step(f.step(), path);
    const TimeGrid& g = path.grid;
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i)
        acc += f(g.point(i)) * (path.values[i + 1] - path.values[i]);
    return acc;
}

// ---------------------------------------------------------------------------
// Transfer operator.  The sampler's process on [0,T] is T^H Z(t/T), so
// int_0^T f dX = T^H int_0^1 f(T s) dZ(s); the chaos machinery runs on the
// unit interval with f evaluated at the rescaled quadrature nodes.

namespace {
std::vector<double> f_at_unit_nodes(const Integrand& f, const HermiteSampler& s) {
    const double T = s.grid().T;
    const std::vector<double>& u = s.u_nodes();
    std::vector<double> out(u.size());
    for (std::size_t g = 0; g < u.size(); ++g) out[g] = f(T * u[g]);
    return out;
}
} // namespace

Eigen::MatrixXd transfer_operator(const Integrand& f, const HermiteSampler& sampler) {
    const std::vector<double> fu = f_at_unit_nodes(f, sampler);
    return sampler.kernel_table(&fu);
}

double transfer_integral(const Integrand& f, const HermiteSampler& sampler,
                         std::uint64_t seed) {
    const std::vector<double> fu = f_at_unit_nodes(f, sampler);
    const std::vector<double> dW = sampler.inner_increments(seed);
    const std::vector<double> z = sampler.chaos_values(dW, &fu);
    return std::pow(sampler.grid().T, sampler.hurst()) * z.back();
}

HyperRatio hypercontractivity_check(const std::vector<double>& samples, int m) {
    if (m != 1 && m != 2) throw config_error("hypercontractivity_check: m in {1,2}");
    if (samples.size() < 10000)
        throw stats_error("hypercontractivity_check: need at least 10^4 samples");
    double s2 = 0.0, s2m = 0.0;
    for (double x : samples) {
        s2 += x * x;
        s2m += std::pow(std::abs(x), 2.0 * m);
    }
    s2 /= samples.size();
    s2m /= samples.size();
    if (!(s2 > 0.0)) throw stats_error("hypercontractivity_check: degenerate samples (E I^2 = 0)");
    HyperRatio r;
    r.ratio = s2m / std::pow(s2, m);
    r.bound = (m == 1) ? 3.0 : 15.0;
    // m = 1 is the Gaussian fourth moment: allow sampling slack around 3
    r.pass = std::isfinite(r.ratio) && r.ratio <= r.bound * (m == 1 ? 1.10 : 1.0);
    return r;
}

} // namespace fracsde
