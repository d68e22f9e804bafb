#include "fracsde/netop.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

#include "fracsde/rng.hpp"

namespace fracsde {

namespace {
double harmonic_mean(double a, double b) { return 2.0 / (1.0 / a + 1.0 / b); }
} // namespace

OperatorSpec OperatorSpec::assemble(const NetworkCoefficients& coeffs, int n_x) {
    if (n_x < 8) throw config_error("assemble: n_x >= 8 required");
    const double h = 1.0 / n_x;

    // sampled coefficients and positivity checks
    GridSamples gs;
    gs.gamma = coeffs.gamma;
    gs.eps = coeffs.eps;
    std::vector<double> c(n_x + 1), cd(n_x + 1);
    gs.p.resize(n_x + 1);
    gs.pd.resize(n_x + 1);
    for (int i = 0; i <= n_x; ++i) {
        const double x = i * h;
        c[i] = coeffs.c(x);
        cd[i] = coeffs.cd(x);
        gs.p[i] = coeffs.p(x);
        gs.pd[i] = coeffs.pd(x);
        if (!(c[i] > 0.0) || !(cd[i] > 0.0))
            throw config_error("assemble: diffusion coefficients must be positive");
        if (!(gs.p[i] - coeffs.lambda > 0.0) || !(gs.pd[i] > 0.0))
            throw config_error("assemble: need p - lambda > 0 and pd > 0 on the grid");
    }
    if (!(coeffs.gamma > 0.0) || !(coeffs.eps > 0.0))
        throw config_error("assemble: gamma and eps must be positive");
    gs.cface.resize(n_x);
    gs.cdface.resize(n_x);
    for (int i = 0; i < n_x; ++i) {
        gs.cface[i] = harmonic_mean(c[i], c[i + 1]);
        gs.cdface[i] = harmonic_mean(cd[i], cd[i + 1]);
    }
    const auto& p = gs.p;
    const auto& pd = gs.pd;

    // unknowns: u_1..u_nx | ud_0..ud_{nx-1} | d | v_0..v_nx
    const int N = 3 * n_x + 2;
    const int off_u = 0, off_ud = n_x, idx_d = 2 * n_x, off_v = 2 * n_x + 1;
    auto iu = [&](int i) { return off_u + (i - 1); };     // i = 1..n_x
    auto iud = [&](int i) { return off_ud + i; };         // i = 0..n_x-1
    auto iv = [&](int i) { return off_v + i; };           // i = 0..n_x

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    const double ih2 = 1.0 / (h * h);

    // axon block: du/dt = (c u')' - (p - lambda) u - v, u_0 = d, u'(1) = 0
    for (int i = 1; i <= n_x; ++i) {
        const double cm = harmonic_mean(c[i - 1], c[i]);
        const double cp = (i < n_x) ? harmonic_mean(c[i], c[i + 1]) : cm; // mirrored face
        const int row = iu(i);
        if (i == n_x) {
            // Neumann ghost u_{n+1} = u_{n-1}
            A(row, iu(n_x - 1)) += 2.0 * cm * ih2;
            A(row, iu(n_x)) += -2.0 * cm * ih2;
        } else {
            A(row, (i - 1 >= 1) ? iu(i - 1) : idx_d) += cm * ih2;
            A(row, iu(i)) += -(cm + cp) * ih2;
            A(row, iu(i + 1)) += cp * ih2;
        }
        A(row, iu(i)) += -(p[i] - coeffs.lambda);
        A(row, iv(i)) += -1.0;
    }

    // dendrite block: dud/dt = (cd ud')' - pd ud, ud_{n_x} = d, ud'(0) = 0
    for (int i = 0; i <= n_x - 1; ++i) {
        const int row = iud(i);
        if (i == 0) {
            const double cp = harmonic_mean(cd[0], cd[1]);
            A(row, iud(1)) += 2.0 * cp * ih2;
            A(row, iud(0)) += -2.0 * cp * ih2;
        } else {
            const double cm = harmonic_mean(cd[i - 1], cd[i]);
            const double cp = harmonic_mean(cd[i], cd[i + 1]);
            A(row, iud(i - 1)) += cm * ih2;
            A(row, iud(i)) += -(cm + cp) * ih2;
            A(row, (i + 1 <= n_x - 1) ? iud(i + 1) : idx_d) += cp * ih2;
        }
        A(row, iud(i)) += -pd[i];
    }

    // soma: d' = -gamma d + (c(0) u'(0) - cd(1) ud'(1)), one-sided
    // second-order stencils with the eliminated trace values.
    // (Sign follows the form a(.,.); see the form's integration by parts.)
    {
        const int row = idx_d;
        A(row, idx_d) += -coeffs.gamma;
        const double c0 = c[0] / (2.0 * h);
        // u'(0) ~ (-3 u_0 + 4 u_1 - u_2) / (2h), u_0 = d
        A(row, idx_d) += c0 * (-3.0);
        A(row, iu(1)) += c0 * 4.0;
        A(row, iu(2)) += c0 * (-1.0);
        const double cd1 = cd[n_x] / (2.0 * h);
        // ud'(1) ~ (3 ud_n - 4 ud_{n-1} + ud_{n-2}) / (2h), ud_n = d
        A(row, idx_d) += -cd1 * 3.0;
        A(row, iud(n_x - 1)) += cd1 * 4.0;
        A(row, iud(n_x - 2)) += -cd1;
    }

    // recovery: dv/dt = u - eps v (u at x=0 is the soma value)
    for (int i = 0; i <= n_x; ++i) {
        const int row = iv(i);
        A(row, (i == 0) ? idx_d : iu(i)) += 1.0;
        A(row, iv(i)) += -coeffs.eps;
    }

    // discrete X inner product: trapezoid per edge; the soma weight absorbs
    // the two eliminated half-weights.
    Eigen::VectorXd w = Eigen::VectorXd::Zero(N);
    for (int i = 1; i <= n_x; ++i) w(iu(i)) = (i == n_x) ? 0.5 * h : h;
    for (int i = 0; i <= n_x - 1; ++i) w(iud(i)) = (i == 0) ? 0.5 * h : h;
    w(idx_d) = 1.0 + h;
    for (int i = 0; i <= n_x; ++i) w(iv(i)) = (i == 0 || i == n_x) ? 0.5 * h : h;

    OperatorSpec spec;
    spec.A_ = std::move(A);
    spec.w_ = std::move(w);
    spec.n_x_ = n_x;
    spec.h_ = h;
    spec.coeffs_ = coeffs;
    spec.samples_ = std::move(gs);
    spec.has_coeffs_ = true;
    spec.finalize();
    return spec;
}

OperatorSpec OperatorSpec::from_matrix(const Eigen::MatrixXd& A, Eigen::VectorXd weights) {
    if (A.rows() != A.cols()) throw config_error("from_matrix: square matrix required");
    OperatorSpec spec;
    spec.A_ = A;
    spec.w_ = weights.size() ? std::move(weights) : Eigen::VectorXd::Ones(A.rows());
    if (spec.w_.size() != A.rows()) throw config_error("from_matrix: weight size mismatch");
    spec.finalize();
    return spec;
}

void OperatorSpec::finalize() {
    const int N = dim();
    Eigen::EigenSolver<Eigen::MatrixXd> es(A_, false);
    max_re_ = es.eigenvalues().real().maxCoeff();
    omega_ = -max_re_ * 0.9;

    // exact discrete dissipativity rate: <A v,v>_w <= -omega_diss ||v||_w^2
    const Eigen::MatrixXd WA = w_.asDiagonal() * A_;
    const Eigen::MatrixXd S = -0.5 * (WA + WA.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(
        S, Eigen::MatrixXd(w_.asDiagonal()));
    omega_diss_ = ges.eigenvalues().minCoeff();

    if (has_coeffs_) {
        // coercivity of the form against the discrete V-norm
        Eigen::MatrixXd F(N, N), GV(N, N);
        for (int j = 0; j < N; ++j) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(N);
            e(j) = 1.0;
            const StateVector sj = unpack(e);
            for (int i = 0; i <= j; ++i) {
                Eigen::VectorXd f = Eigen::VectorXd::Zero(N);
                f(i) = 1.0;
                const StateVector si = unpack(f);
                const double aij = apply_form(*this, sj, si);
                const double aji = apply_form(*this, si, sj);
                F(i, j) = 0.5 * (aij + aji); // symmetric part only
                F(j, i) = F(i, j);
                const double g =
                    0.5 * (vnorm_sq(e + f) - vnorm_sq(e) - vnorm_sq(f));
                GV(i, j) = g;
                GV(j, i) = g;
            }
        }
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> gf(F, GV);
        omega_form_ = gf.eigenvalues().minCoeff();
    } else {
        omega_form_ = omega_diss_;
    }

    // fit M from sampled semigroup norms against e^{-omega t}
    M_ = 1.0;
    if (omega_ > 0.0) {
        for (double t : {0.25 / omega_, 0.5 / omega_, 1.0 / omega_, 2.0 / omega_}) {
            const double nrm = semigroup_norm(t);
            M_ = std::max(M_, nrm * std::exp(omega_ * t));
        }
    }
}

const NetworkCoefficients& OperatorSpec::coefficients() const {
    if (!has_coeffs_) throw config_error("OperatorSpec: no network coefficients stored");
    return coeffs_;
}

double OperatorSpec::xdot(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
    return (a.array() * w_.array() * b.array()).sum();
}

double OperatorSpec::vnorm_sq(const Eigen::VectorXd& a) const {
    double s = xdot(a, a);
    if (is_network()) {
        const StateVector st = unpack(a);
        for (int i = 0; i < n_x_; ++i) {
            const double du = (st.u(i + 1) - st.u(i)) / h_;
            const double dud = (st.ud(i + 1) - st.ud(i)) / h_;
            s += h_ * (du * du + dud * dud);
        }
    }
    return s;
}

Eigen::MatrixXd OperatorSpec::semigroup_matrix(double t) const {
    if (t < 0.0) throw config_error("semigroup: t >= 0 required");
    return (t * A_).exp();
}

Eigen::VectorXd OperatorSpec::semigroup_apply(double t, const Eigen::VectorXd& x) const {
    return semigroup_matrix(t) * x;
}

double OperatorSpec::semigroup_norm(double t) const {
    const Eigen::MatrixXd E = semigroup_matrix(t);
    const Eigen::VectorXd sq = w_.array().sqrt();
    const Eigen::MatrixXd Ew =
        sq.asDiagonal() * E * sq.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Ew);
    return svd.singularValues()(0);
}

double OperatorSpec::fractional_power_norm(double gamma_frac, const Eigen::VectorXd& x) const {
    if (gamma_frac < 0.0 || gamma_frac > 1.0)
        throw config_error("fractional_power_norm: gamma_frac in [0,1]");
    if (gamma_frac == 0.0) return xnorm(x);
    if (gamma_frac == 1.0) return xnorm(A_ * x);
    Eigen::MatrixXd negA = -A_;
    Eigen::MatrixPower<Eigen::MatrixXd> pw(negA);
    return xnorm(pw(gamma_frac) * x);
}

Eigen::VectorXd OperatorSpec::pack(const StateVector& s) const {
    if (!is_network()) throw config_error("pack: generic operator has no state layout");
    if (s.u.size() != n_x_ + 1 || s.ud.size() != n_x_ + 1 || s.v.size() != n_x_ + 1)
        throw config_error("pack: field sizes must be n_x + 1");
    if (!s.trace_ok(1e-9 * (1.0 + std::abs(s.d))))
        throw config_error("pack: state violates the trace constraint u(0) = ud(1) = d");
    Eigen::VectorXd x(dim());
    for (int i = 1; i <= n_x_; ++i) x(i - 1) = s.u(i);
    for (int i = 0; i <= n_x_ - 1; ++i) x(n_x_ + i) = s.ud(i);
    x(2 * n_x_) = s.d;
    for (int i = 0; i <= n_x_; ++i) x(2 * n_x_ + 1 + i) = s.v(i);
    return x;
}

StateVector OperatorSpec::unpack(const Eigen::VectorXd& x) const {
    if (!is_network()) throw config_error("unpack: generic operator has no state layout");
    StateVector s;
    s.u.resize(n_x_ + 1);
    s.ud.resize(n_x_ + 1);
    s.v.resize(n_x_ + 1);
    s.d = x(2 * n_x_);
    s.u(0) = s.d;
    for (int i = 1; i <= n_x_; ++i) s.u(i) = x(i - 1);
    for (int i = 0; i <= n_x_ - 1; ++i) s.ud(i) = x(n_x_ + i);
    s.ud(n_x_) = s.d;
    for (int i = 0; i <= n_x_; ++i) s.v(i) = x(2 * n_x_ + 1 + i);
    return s;
}

std::string OperatorSpec::triplet_export() const {
    std::ostringstream os;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (A_(i, j) != 0.0) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i, j, A_(i, j));
                os << buf;
            }
    return os.str();
}

double apply_form(const OperatorSpec& spec, const StateVector& s1, const StateVector& s2) {
    if (!spec.is_network()) throw config_error("apply_form: network operator required");
    const double tol = 1e-8 * (1.0 + std::abs(s1.d) + std::abs(s2.d));
    if (!s1.trace_ok(tol) || !s2.trace_ok(tol))
        throw config_error("apply_form: states must satisfy the trace constraint");
    const int n = spec.n_x();
    const double h = spec.h();
    const auto& g = spec.grid_samples();

    auto trapz = [n, h](auto&& f) {
        double s = 0.5 * (f(0) + f(n));
        for (int i = 1; i < n; ++i) s += f(i);
        return s * h;
    };

    double a = 0.0;
    a += trapz([&](int i) { return g.p[i] * s1.u(i) * s2.u(i); });
    a += trapz([&](int i) { return g.pd[i] * s1.ud(i) * s2.ud(i); });
    a += trapz([&](int i) { return s1.u(i) * s2.v(i) - s1.v(i) * s2.u(i); });
    a += g.eps * trapz([&](int i) { return s1.v(i) * s2.v(i); });
    a += g.gamma * s1.d * s2.d;
    // gradient terms: cellwise difference quotients against face coefficients
    for (int i = 0; i < n; ++i) {
        a += g.cface[i] * (s1.u(i + 1) - s1.u(i)) * (s2.u(i + 1) - s2.u(i)) / h;
        a += g.cdface[i] * (s1.ud(i + 1) - s1.ud(i)) * (s2.ud(i + 1) - s2.ud(i)) / h;
    }
    return a;
}

StateVector random_state(const OperatorSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    StateVector s;
    const int n = spec.n_x();
    s.u.resize(n + 1);
    s.ud.resize(n + 1);
    s.v.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        s.u(i) = rng.normal();
        s.ud(i) = rng.normal();
        s.v(i) = rng.normal();
    }
    s.d = rng.normal();
    s.enforce_trace();
    return s;
}

} // namespace fracsde
