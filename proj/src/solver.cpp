#include "fracsde/solver.hpp"

#include <cmath>
#include <limits>

namespace fracsde {

NonlinearitySpec NonlinearitySpec::none() {
    NonlinearitySpec n;
    n.h = [](double) { return 0.0; };
    n.zero = true;
    n.growth_c = 1.0;
    return n;
}

NonlinearitySpec NonlinearitySpec::linear() {
    NonlinearitySpec n;
    n.h = [](double u) { return -u; };
    n.rho = 0;
    n.growth_c = 1.0;
    return n;
}

NonlinearitySpec NonlinearitySpec::cubic() {
    NonlinearitySpec n;
    n.h = [](double u) { return -u * u * u; };
    n.rho = 1;
    n.growth_c = 1.0;
    return n;
}

NonlinearitySpec NonlinearitySpec::fitzhugh(double xi) {
    if (!(xi > 0.0 && xi < 1.0)) throw config_error("fitzhugh: xi in (0,1)");
    NonlinearitySpec n;
    const double lam = (xi * xi - xi + 1.0) / 3.0;
    n.lambda = lam;
    n.h = [xi, lam](double u) { return -lam * u + u * (1.0 - u) * (u - xi); };
    n.rho = 1;
    n.growth_c = 3.0 + lam;
    return n;
}

void NonlinearitySpec::validate(double range, int samples) const {
    if (!h) throw config_error("NonlinearitySpec: missing h");
    double prev_u = -range, prev_h = h(-range);
    for (int i = 1; i <= samples; ++i) {
        const double u = -range + 2.0 * range * i / samples;
        const double hu = h(u);
        if ((hu - prev_h) * (u - prev_u) > 1e-12 * (1.0 + std::abs(hu)))
            throw contract_error("NonlinearitySpec: h is not dissipative on the sampled range");
        if (std::abs(hu) > growth_c * (1.0 + std::pow(std::abs(u), 2 * rho + 1)))
            throw contract_error("NonlinearitySpec: h violates the declared growth bound");
        prev_u = u;
        prev_h = hu;
    }
}

double yosida_resolvent(const NonlinearitySpec& nl, double alpha, double w) {
    if (!(alpha > 0.0)) throw config_error("yosida_resolvent: alpha > 0");
    if (nl.zero) return w;
    // g(y) = y - alpha h(y) is strictly increasing; bracket then Newton.
    auto g = [&](double y) { return y - alpha * nl.h(y); };
    double lo = w, hi = w;
    double glo = g(lo) - w, ghi = g(hi) - w;
    double step = 1.0 + std::abs(w);
    int guard = 0;
    while (glo > 0.0) {
        lo -= step;
        step *= 2.0;
        glo = g(lo) - w;
        if (++guard > 200) throw contract_error("yosida_resolvent: cannot bracket (h not dissipative?)");
    }
    step = 1.0 + std::abs(w);
    while (ghi < 0.0) {
        hi += step;
        step *= 2.0;
        ghi = g(hi) - w;
        if (++guard > 400) throw contract_error("yosida_resolvent: cannot bracket (h not dissipative?)");
    }
    double y = 0.5 * (lo + hi);
    const double tol = 1e-12 * (1.0 + std::abs(w));
    for (int it = 0; it < 200; ++it) {
        const double r = g(y) - w;
        if (std::abs(r) <= tol) return y;
        if (r > 0.0) hi = y; else lo = y;
        const double dh = (nl.h(y + 1e-7) - nl.h(y - 1e-7)) / 2e-7;
        const double slope = 1.0 - alpha * dh;
        double ynew = (slope > 1e-14) ? y - r / slope : y;
        if (!(ynew > lo && ynew < hi)) ynew = 0.5 * (lo + hi); // bisection fallback
        y = ynew;
    }
    return y;
}

double yosida_map(const NonlinearitySpec& nl, double alpha, double w) {
    if (nl.zero) return 0.0;
    if (alpha == 0.0) return nl.h(w);
    return nl.h(yosida_resolvent(nl, alpha, w));
}

namespace {

// F_alpha applied through the Nemitsky lift on the selected coordinates.
Eigen::VectorXd apply_nonlinearity(const NonlinearitySpec& nl, double alpha,
                                   const Eigen::VectorXd& w) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(w.size());
    if (nl.zero) return out;
    if (nl.indices.empty()) {
        for (int i = 0; i < w.size(); ++i) out(i) = yosida_map(nl, alpha, w(i));
    } else {
        for (int i : nl.indices) out(i) = yosida_map(nl, alpha, w(i));
    }
    return out;
}

} // namespace

SolutionBundle solve(const OperatorSpec& spec, const NonlinearitySpec& nl,
                     const VectorNoisePath& noise, const Eigen::VectorXd& u0,
                     const SolverConfig& cfg) {
    cfg.validate();
    if (u0.size() != spec.dim()) throw config_error("solve: u0 dimension mismatch");
    if (noise.values.cols() != spec.dim())
        throw config_error("solve: noise dimension mismatch");
    const TimeGrid& g = noise.grid;
    const int n = g.n, N = spec.dim();
    const double dt = g.dt();
    // alpha = 0 means the exact F in the semi-implicit scheme
    const double alpha = cfg.alpha_yosida;

    SolutionBundle out;
    out.grid = g;
    out.seed = noise.seed;
    out.conv = convolve(spec, noise);
    out.states = Eigen::MatrixXd::Zero(n + 1, N);
    out.states.row(0) = u0.transpose();

    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(N, N);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(I - dt * spec.matrix());

    const double scale0 = std::max(1.0, spec.xnorm(u0));
    double min_margin = std::numeric_limits<double>::infinity();
    double energy_fun = 0.5 * spec.xnorm(u0) * spec.xnorm(u0);
    double vint = 0.0;
    const double omega = std::max(spec.omega_diss(), 0.0);

    Eigen::VectorXd y = u0;
    for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd z = out.conv.values.row(k).transpose();
        const Eigen::VectorXd F = apply_nonlinearity(nl, alpha, z + y);
        const Eigen::VectorXd ynew = lu.solve(y + dt * F);

        // discrete energy inequality of the eq:2 chain:
        //   1/2||y+||^2 - 1/2||y||^2 <= dt <A y+, y+> + dt <F_a(z_k), y+>
        const double lhs = 0.5 * spec.xnorm(ynew) * spec.xnorm(ynew) -
                           0.5 * spec.xnorm(y) * spec.xnorm(y);
        const Eigen::VectorXd Fz = apply_nonlinearity(nl, alpha, z);
        const double rhs = dt * spec.xdot(spec.apply(ynew), ynew) + dt * spec.xdot(Fz, ynew);
        min_margin = std::min(min_margin, rhs - lhs);

        y = ynew;
        out.states.row(k + 1) = (y + out.conv.values.row(k + 1).transpose()).transpose();

        const double ny = spec.xnorm(y);
        if (ny > cfg.blowup_factor * scale0)
            throw numerical_error("solve: blow-up detected at step " + std::to_string(k + 1));
        vint += dt * spec.vnorm_sq(y);
        energy_fun = std::max(energy_fun, 0.5 * ny * ny + omega * vint);
    }
    out.min_energy_margin = min_margin;
    out.energy_functional = energy_fun;
    return out;
}

ContractionReport contraction_check(const OperatorSpec& spec, const NonlinearitySpec& nl,
                                    const VectorNoisePath& noise, const Eigen::VectorXd& u0,
                                    const Eigen::VectorXd& u1, const SolverConfig& cfg) {
    const SolutionBundle a = solve(spec, nl, noise, u0, cfg);
    const SolutionBundle b = solve(spec, nl, noise, u1, cfg);
    ContractionReport rep;
    rep.omega_hat = spec.omega(); // estimated spectral gap

    const double d0 = spec.xnorm(u0 - u1);
    rep.pass = true;
    for (int i = 0; i <= noise.grid.n; ++i) {
        const double t = noise.grid.point(i);
        const Eigen::VectorXd diff =
            (a.states.row(i) - b.states.row(i)).transpose();
        const double r = (d0 > 0.0) ? std::pow(spec.xnorm(diff) / d0, 2) : 0.0;
        rep.times.push_back(t);
        rep.ratio.push_back(r);
        if (r > (1.0 + rep.tolerance) * std::exp(-2.0 * rep.omega_hat * t)) rep.pass = false;
    }
    return rep;
}

double yosida_cauchy_check(const OperatorSpec& spec, const NonlinearitySpec& nl,
                           const VectorNoisePath& noise, const Eigen::VectorXd& u0,
                           double alpha, double beta_reg) {
    if (!(alpha > 0.0) || !(beta_reg > 0.0))
        throw config_error("yosida_cauchy_check: alpha, beta > 0");
    SolverConfig ca, cb;
    ca.scheme = cb.scheme = SolverScheme::yosida;
    ca.alpha_yosida = alpha;
    cb.alpha_yosida = beta_reg;
    const SolutionBundle a = solve(spec, nl, noise, u0, ca);
    const SolutionBundle b = solve(spec, nl, noise, u0, cb);
    double sup = 0.0;
    for (int i = 0; i <= noise.grid.n; ++i) {
        const Eigen::VectorXd diff = (a.states.row(i) - b.states.row(i)).transpose();
        sup = std::max(sup, spec.xnorm(diff));
    }
    return sup;
}

} // namespace fracsde
