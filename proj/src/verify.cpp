#include "fracsde/verify.hpp"

#include <algorithm>
#include <cmath>

#include "fracsde/convolution.hpp"
#include "fracsde/io.hpp"
#include "fracsde/neuron.hpp"
#include "fracsde/noise1d.hpp"
#include "fracsde/qnoise.hpp"
#include "fracsde/solver.hpp"
#include "fracsde/stats.hpp"
#include "fracsde/wiener.hpp"

namespace fracsde {

using nlohmann::json;

namespace {

json check(const std::string& what, bool ok, json extra = {}) {
    json j = std::move(extra);
    j["check"] = what;
    j["pass"] = ok;
    return j;
}

bool all_pass(const json& checks) {
    for (const auto& c : checks)
        if (!c.at("pass").get<bool>()) return false;
    return true;
}

} // namespace

// --------------------------------------------------------------------------
// covariance: empirical second moments of Cholesky paths vs closed forms

SuiteResult verify_covariance(bool quick, std::uint64_t seed) {
    const int n = 64;
    const int paths = quick ? 2000 : 10000;
    const TimeGrid grid(1.0, n);
    json checks = json::array();

    std::vector<CovarianceKernel> kernels = {
        CovarianceKernel::fbm(0.6), CovarianceKernel::fbm(0.75), CovarianceKernel::fbm(0.9),
        CovarianceKernel::bifbm(0.8, 0.75)};

    // 10 checkpoint pairs spread over the grid
    const std::vector<std::pair<int, int>> pairs = {{8, 8},   {16, 16}, {32, 32}, {64, 64},
                                                    {8, 32},  {16, 48}, {32, 64}, {8, 64},
                                                    {24, 40}, {48, 64}};
    for (const auto& k : kernels) {
        GaussianSampler sampler(k, grid);
        std::vector<std::vector<double>> prod(pairs.size());
        for (int e = 0; e < paths; ++e) {
            const NoisePath p = sampler.sample(derive_seed(seed, e));
            for (std::size_t c = 0; c < pairs.size(); ++c)
                prod[c].push_back(p.values[pairs[c].first] * p.values[pairs[c].second]);
        }
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            const MeanStderr ms = mean_stderr(prod[c]);
            const double target =
                cov(k, grid.point(pairs[c].first), grid.point(pairs[c].second));
            const bool ok = std::abs(ms.mean - target) <= 3.0 * ms.stderr_;
            checks.push_back(check(to_string(k.family) + " pair " + std::to_string(c), ok,
                                   {{"mc", ms.mean},
                                    {"target", target},
                                    {"stderr", ms.stderr_}}));
        }
    }
    return {"covariance", all_pass(checks), {{"paths", paths}, {"checks", checks}}};
}

// --------------------------------------------------------------------------
// isometry: E I(f)^2 = h_inner(f,f) for random step functions, and the
// indicator identity h_inner(1_[0,t],1_[0,t]) = R(t,t)

SuiteResult verify_isometry(bool quick, std::uint64_t seed) {
    const int n = 256;
    const int paths = quick ? 2000 : 10000;
    const TimeGrid grid(1.0, n);
    json checks = json::array();

    const double hs[3] = {0.6, 0.75, 0.9};
    const int per_h[3] = {7, 7, 6}; // 20 random step functions total
    Rng rng(derive_seed(seed, 9001));

    for (int hi = 0; hi < 3; ++hi) {
        const CovarianceKernel k = CovarianceKernel::fbm(hs[hi]);
        GaussianSampler sampler(k, grid);
        std::vector<NoisePath> ens;
        ens.reserve(paths);
        for (int e = 0; e < paths; ++e) ens.push_back(sampler.sample(derive_seed(seed, e)));

        // indicator identity at t = 0.7 (exact cell integration)
        {
            const StepFunction ind = StepFunction::indicator(0.0, 0.7, 1.0);
            const double q = h_inner(ind, ind, k, 1.0);
            const double r = cov(k, 0.7, 0.7);
            const bool ok = std::abs(q - r) <= 1e-4 * std::abs(r);
            checks.push_back(check("indicator H=" + std::to_string(hs[hi]), ok,
                                   {{"quadrature", q}, {"target", r}}));
        }

        for (int f = 0; f < per_h[hi]; ++f) {
            // random step function with grid-aligned breakpoints
            const int pieces = 2 + static_cast<int>(rng.uniform01() * 4);
            std::vector<int> idx = {0, n};
            for (int j = 1; j < pieces; ++j)
                idx.push_back(1 + static_cast<int>(rng.uniform01() * (n - 1)));
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            std::vector<double> br, cf;
            for (int i : idx) br.push_back(grid.point(i));
            for (std::size_t j = 0; j + 1 < br.size(); ++j)
                cf.push_back(2.0 * rng.uniform01() - 1.0);
            const StepFunction sf(br, cf);

            std::vector<double> samples;
            samples.reserve(paths);
            for (const auto& p : ens) samples.push_back(wiener_integral_step(sf, p));
            const VarStderr vs = variance_stderr(samples);
            const double target = h_inner(sf, sf, k, 1.0);
            const bool ok = std::abs(vs.var - target) <= 3.0 * vs.stderr_;
            checks.push_back(check("step f" + std::to_string(f) + " H=" + std::to_string(hs[hi]),
                                   ok,
                                   {{"mc_var", vs.var},
                                    {"target", target},
                                    {"stderr", vs.stderr_}}));
        }
    }
    return {"isometry", all_pass(checks), {{"paths", paths}, {"checks", checks}}};
}

// --------------------------------------------------------------------------
// hermite: Rosenblatt increments, covariance, non-Gaussianity

SuiteResult verify_hermite(bool quick, std::uint64_t seed) {
    const double H = 0.7;
    const int n = 64;
    const int m_inner = quick ? 512 : 2048;
    const int paths = quick ? 800 : 5000;
    const TimeGrid grid(1.0, n);
    const HermiteSampler sampler(H, 2, grid, m_inner);
    json checks = json::array();

    Eigen::MatrixXd vals(paths, n + 1);
    for (int e = 0; e < paths; ++e) {
        const NoisePath p = sampler.sample(derive_seed(seed, e));
        for (int i = 0; i <= n; ++i) vals(e, i) = p.values[i];
    }

    // increment second moments at 6 dyadic lags (stationary increments:
    // average over aligned starts as well)
    for (int k = 1; k <= 6; ++k) {
        const int lag = n >> k;
        double acc = 0.0;
        std::size_t cnt = 0;
        for (int e = 0; e < paths; ++e)
            for (int i = 0; i + lag <= n; i += lag) {
                const double d = vals(e, i + lag) - vals(e, i);
                acc += d * d;
                ++cnt;
            }
        const double emp = acc / cnt;
        const double target = std::pow(lag * grid.dt(), 2 * H);
        const bool ok = std::abs(emp - target) <= 0.05 * target;
        checks.push_back(check("increment lag 2^-" + std::to_string(k), ok,
                               {{"mc", emp}, {"target", target}}));
    }

    // covariance at (T/2, T) matches the fBm form
    {
        std::vector<double> prod(paths);
        for (int e = 0; e < paths; ++e) prod[e] = vals(e, n / 2) * vals(e, n);
        const MeanStderr ms = mean_stderr(prod);
        const double target = cov(CovarianceKernel::fbm(H), 0.5, 1.0);
        const bool ok = std::abs(ms.mean - target) <= 3.0 * ms.stderr_;
        checks.push_back(check("covariance (T/2,T)", ok,
                               {{"mc", ms.mean}, {"target", target}, {"stderr", ms.stderr_}}));
    }

    // non-Gaussianity at 99%: skewness/kurtosis z-test on Z_1
    {
        std::vector<double> z1(paths);
        for (int e = 0; e < paths; ++e) z1[e] = vals(e, n);
        const MomentTest mt = moment_test(z1);
        const bool ok = std::max(std::abs(mt.z_skew), std::abs(mt.z_kurt)) > 2.576;
        checks.push_back(check("gaussianity rejected", ok,
                               {{"skewness", mt.skewness},
                                {"z_skew", mt.z_skew},
                                {"z_kurt", mt.z_kurt}}));
    }
    return {"hermite", all_pass(checks),
            {{"paths", paths}, {"m_inner", sampler.m_inner()}, {"checks", checks}}};
}

// --------------------------------------------------------------------------
// trace identity: E ||X_t||^2 = (truncated Tr Q) R(t,t), plus the tail bound

SuiteResult verify_trace(bool quick, std::uint64_t seed) {
    const CovarianceKernel k = CovarianceKernel::fbm(0.7);
    const int J = 16, dim = 32;
    const int reps = quick ? 2000 : 10000;
    const TimeGrid grid(1.0, 8);
    const int it = 6; // checkpoint t = 0.75
    json checks = json::array();

    QSpec qJ;
    qJ.r = 2.0;
    qJ.J = J;
    QSpec q2J = qJ;
    q2J.J = 2 * J;

    GaussianSampler sampler(k, grid);
    std::vector<double> normJ(reps), norm2J(reps);
    for (int e = 0; e < reps; ++e) {
        double sJ = 0.0, s2J = 0.0;
        for (int j = 1; j <= 2 * J; ++j) {
            const NoisePath x = sampler.sample(derive_seed(derive_seed(seed, e), j));
            const double contrib = q2J.lambda(j) * x.values[it] * x.values[it];
            s2J += contrib;
            if (j <= J) sJ += contrib;
        }
        normJ[e] = sJ;
        norm2J[e] = s2J;
    }
    const double Rtt = cov(k, grid.point(it), grid.point(it));
    {
        const MeanStderr ms = mean_stderr(normJ);
        const double target = trace(qJ).partial * Rtt;
        const bool ok = std::abs(ms.mean - target) <= 3.0 * ms.stderr_;
        checks.push_back(check("trace identity", ok,
                               {{"mc", ms.mean}, {"target", target}, {"stderr", ms.stderr_}}));
    }
    {
        std::vector<double> diff(reps);
        for (int e = 0; e < reps; ++e) diff[e] = norm2J[e] - normJ[e];
        const MeanStderr ms = mean_stderr(diff);
        const double bound = Rtt * trace(qJ).tail;
        const bool ok = ms.mean <= bound + 3.0 * ms.stderr_;
        checks.push_back(check("truncation tail bound", ok,
                               {{"mc_diff", ms.mean}, {"bound", bound}, {"stderr", ms.stderr_}}));
    }
    (void)dim;
    return {"trace", all_pass(checks), {{"reps", reps}, {"checks", checks}}};
}

// --------------------------------------------------------------------------
// scalar stochastic convolution variance

SuiteResult verify_conv_variance(bool quick, std::uint64_t seed) {
    const double a = 1.0, T = 1.0;
    const int n = 512;
    const int paths = quick ? 2000 : 10000;
    const TimeGrid grid(T, n);
    json checks = json::array();

    Eigen::MatrixXd A1(1, 1);
    A1(0, 0) = -a;
    const OperatorSpec op = OperatorSpec::from_matrix(A1);

    auto run = [&](const CovarianceKernel& k, double target, const std::string& label) {
        GaussianSampler sampler(k, grid);
        std::vector<double> wT(paths);
        for (int e = 0; e < paths; ++e) {
            const NoisePath x = sampler.sample(derive_seed(seed, e));
            VectorNoisePath X;
            X.grid = grid;
            X.hurst = k.hurst_index();
            X.values = Eigen::MatrixXd::Zero(n + 1, 1);
            for (int i = 0; i <= n; ++i) X.values(i, 0) = x.values[i];
            wT[e] = convolve(op, X).values(n, 0);
        }
        const VarStderr vs = variance_stderr(wT);
        const bool ok = std::abs(vs.var - target) <= 3.0 * vs.stderr_;
        checks.push_back(check(label, ok,
                               {{"mc_var", vs.var}, {"target", target}, {"stderr", vs.stderr_}}));
    };

    {
        const CovarianceKernel k = CovarianceKernel::fbm(0.7);
        const Integrand f([a, T](double u) { return std::exp(-a * (T - u)); }, 1.0);
        run(k, h_inner(f, f, k, T), "fbm H=0.7 vs quadrature");
    }
    {
        const CovarianceKernel k = CovarianceKernel::fbm(0.5);
        run(k, (1.0 - std::exp(-2.0 * a * T)) / (2.0 * a), "H=1/2 Ito closed form");
    }
    return {"convvar", all_pass(checks), {{"paths", paths}, {"checks", checks}}};
}

// --------------------------------------------------------------------------
// factorization pipeline at gamma_frac = 0 reconstructs the direct scheme

SuiteResult verify_factorization(bool quick, std::uint64_t seed) {
    const int n = quick ? 256 : 1024;
    const int n_x = 32;
    const TimeGrid grid(1.0, n);
    json checks = json::array();

    NeuronParams params;
    const NeuronModel model(params, n_x);
    QSpec q;
    q.J = 8;
    const CovarianceKernel k = CovarianceKernel::fbm(0.7);
    const VectorNoisePath X = model.assemble_noise(k, q, grid, derive_seed(seed, 5));

    const ConvolutionPath direct = convolve(model.op(), X);
    ConvolutionConfig cfg;
    cfg.alpha = 0.35;
    cfg.gamma_frac = 0.0;
    cfg.scheme = ConvolutionScheme::factorization;
    const ConvolutionPath fact = factorized_convolve(model.op(), X, cfg);

    double maxdiff = 0.0;
    for (int i = 0; i <= n; ++i) {
        const Eigen::VectorXd d = (fact.values.row(i) - direct.values.row(i)).transpose();
        maxdiff = std::max(maxdiff, model.op().xnorm(d));
    }
    const double scale = direct.sup_norm();
    const bool ok = maxdiff <= 1e-2 * scale;
    checks.push_back(check("gamma=0 equivalence", ok,
                           {{"max_diff", maxdiff}, {"sup_norm", scale}, {"n", n}}));
    return {"factorization", all_pass(checks), {{"checks", checks}}};
}

// --------------------------------------------------------------------------
// Hoelder regularity of the convolution for the three noise families

SuiteResult verify_hoelder(bool quick, std::uint64_t seed) {
    const int n = 256;
    const int paths = quick ? 1000 : 2000;
    const TimeGrid grid(1.0, n);
    json checks = json::array();

    Eigen::MatrixXd A1(1, 1);
    A1(0, 0) = -1.0;
    const OperatorSpec op = OperatorSpec::from_matrix(A1);

    auto ensemble_for = [&](const CovarianceKernel& k, int m_inner) {
        PathSampler sampler(k, grid, m_inner);
        std::vector<ConvolutionPath> ens;
        ens.reserve(paths);
        for (int e = 0; e < paths; ++e) {
            const NoisePath x = sampler.sample(derive_seed(seed, e));
            VectorNoisePath X;
            X.grid = grid;
            X.hurst = k.hurst_index();
            X.values = Eigen::MatrixXd::Zero(n + 1, 1);
            for (int i = 0; i <= n; ++i) X.values(i, 0) = x.values[i];
            ens.push_back(convolve(op, X));
        }
        return holder_estimate(ens, 2, 7);
    };

    struct Case {
        CovarianceKernel k;
        int m_inner;
        std::string label;
    };
    const Case cases[3] = {
        {CovarianceKernel::fbm(0.7), 0, "fbm H=0.7"},
        {CovarianceKernel::hermite(0.7, 2), 512, "hermite q=2 H=0.7"},
        {CovarianceKernel::bifbm(0.8, 0.75), 0, "bifbm HK=0.6"},
    };
    for (const auto& c : cases) {
        const double est = ensemble_for(c.k, c.m_inner);
        const double target = c.k.hurst_index();
        const bool ok = std::abs(est - target) <= 0.1;
        checks.push_back(check(c.label, ok, {{"estimate", est}, {"target", target}}));
    }
    return {"hoelder", all_pass(checks), {{"paths", paths}, {"checks", checks}}};
}

// --------------------------------------------------------------------------
// operator facts: spectrum, the paper's antisymmetry probe, coercivity

SuiteResult verify_operator(std::uint64_t seed) {
    const int n_x = 64;
    NetworkCoefficients cf; // defaults c = cd = p = pd = 1, gamma = eps = 1
    const OperatorSpec op = OperatorSpec::assemble(cf, n_x);
    json checks = json::array();

    checks.push_back(check("max Re sigma < 0", op.max_re_eig() < 0.0,
                           {{"max_re", op.max_re_eig()}}));

    // the paper's non-symmetry computation with constant test states
    StateVector s1, s2;
    s1.u = Eigen::VectorXd::Ones(n_x + 1);
    s1.ud = Eigen::VectorXd::Ones(n_x + 1);
    s1.d = 1.0;
    s1.v = Eigen::VectorXd::Zero(n_x + 1);
    s2 = s1;
    s2.v = Eigen::VectorXd::Ones(n_x + 1);
    const double anti = apply_form(op, s1, s2) - apply_form(op, s2, s1);
    checks.push_back(check("antisymmetry probe == 2", std::abs(anti - 2.0) <= 1e-12,
                           {{"value", anti}}));

    const double omega_hat = op.omega_form();
    checks.push_back(check("coercivity constant positive", omega_hat > 0.0,
                           {{"omega_form", omega_hat}}));
    double worst = std::numeric_limits<double>::infinity();
    for (int r = 0; r < 200; ++r) {
        const StateVector s = random_state(op, derive_seed(seed, r));
        const double ratio = apply_form(op, s, s) / op.vnorm_sq(op.pack(s));
        worst = std::min(worst, ratio);
    }
    checks.push_back(check("200 random states coercive", worst >= omega_hat - 1e-10,
                           {{"min_ratio", worst}, {"omega_form", omega_hat}}));

    return {"operator", all_pass(checks), {{"checks", checks}}};
}

// --------------------------------------------------------------------------
// contraction of the full neuron under shared noise

SuiteResult verify_contraction(bool quick, std::uint64_t seed) {
    const int n_x = quick ? 24 : 48;
    const int n = quick ? 256 : 512;
    const TimeGrid grid(2.0, n);
    NeuronParams params;
    const NeuronModel model(params, n_x);
    QSpec q;
    q.J = 8;
    const CovarianceKernel k = CovarianceKernel::fbm(0.7);
    const VectorNoisePath X = model.assemble_noise(k, q, grid, derive_seed(seed, 11));

    Rng rng(derive_seed(seed, 12));
    Eigen::VectorXd u1(model.op().dim());
    for (int i = 0; i < u1.size(); ++i) u1(i) = rng.normal();
    u1 /= model.op().xnorm(u1);

    SolverConfig scfg;
    const ContractionReport rep = contraction_check(model.op(), model.nonlinearity(), X,
                                                    model.rest_state(), u1, scfg);
    double worst_excess = 0.0;
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
        const double bound = 1.1 * std::exp(-2.0 * rep.omega_hat * rep.times[i]);
        worst_excess = std::max(worst_excess, rep.ratio[i] / bound);
    }
    json checks = json::array();
    checks.push_back(check("ratio <= 1.1 e^{-2 omega t}", rep.pass,
                           {{"omega_hat", rep.omega_hat}, {"worst_ratio_over_bound", worst_excess}}));
    return {"contraction", all_pass(checks), {{"checks", checks}}};
}

// --------------------------------------------------------------------------
// Yosida scheme: O(alpha + beta) Cauchy rate and alpha-independent energy

SuiteResult verify_yosida(bool quick, std::uint64_t seed) {
    const int n_x = 32;
    const int n = quick ? 128 : 256;
    const TimeGrid grid(1.0, n);
    NeuronParams params;
    const NeuronModel model(params, n_x);
    QSpec q;
    q.J = 8;
    const CovarianceKernel k = CovarianceKernel::fbm(0.7);
    const VectorNoisePath X = model.assemble_noise(k, q, grid, derive_seed(seed, 21));
    Rng rng(derive_seed(seed, 22));
    Eigen::VectorXd u0(model.op().dim());
    for (int i = 0; i < u0.size(); ++i) u0(i) = 0.5 * rng.normal();

    json checks = json::array();

    std::vector<double> diffs;
    for (int kk = 0; kk <= 3; ++kk) {
        const double alpha = 0.1 * std::pow(0.5, kk);
        diffs.push_back(yosida_cauchy_check(model.op(), model.nonlinearity(), X, u0, alpha,
                                            alpha * 0.5));
    }
    for (int kk = 0; kk + 1 < static_cast<int>(diffs.size()); ++kk) {
        const double ratio = diffs[kk] / diffs[kk + 1];
        const bool ok = ratio >= 1.3 && ratio <= 3.0;
        checks.push_back(check("halving ratio " + std::to_string(kk), ok,
                               {{"ratio", ratio}, {"d_k", diffs[kk]}, {"d_k1", diffs[kk + 1]}}));
    }

    std::vector<double> energies;
    for (double alpha : {1e-1, 1e-2, 1e-3}) {
        SolverConfig sc;
        sc.scheme = SolverScheme::yosida;
        sc.alpha_yosida = alpha;
        energies.push_back(solve(model.op(), model.nonlinearity(), X, u0, sc).energy_functional);
    }
    const double lo = *std::min_element(energies.begin(), energies.end());
    const double hi = *std::max_element(energies.begin(), energies.end());
    const bool band_ok = hi <= 1.1 * lo;
    checks.push_back(check("energy functional alpha-independent", band_ok,
                           {{"min", lo}, {"max", hi}}));
    return {"yosida", all_pass(checks), {{"checks", checks}}};
}

// --------------------------------------------------------------------------
// deterministic limit against a high-accuracy reference integration

SuiteResult verify_deterministic() {
    const double T = 1.0;
    const int n = 1 << 12; // dt = 2^-12
    const TimeGrid grid(T, n);
    json checks = json::array();

    Eigen::MatrixXd A1(1, 1);
    A1(0, 0) = -1.0;
    const OperatorSpec op = OperatorSpec::from_matrix(A1);
    NonlinearitySpec nl = NonlinearitySpec::fitzhugh(0.5);

    VectorNoisePath zero;
    zero.grid = grid;
    zero.hurst = 0.7;
    zero.values = Eigen::MatrixXd::Zero(n + 1, 1);
    Eigen::VectorXd u0(1);
    u0(0) = 1.0;
    SolverConfig scfg;
    const SolutionBundle sol = solve(op, nl, zero, u0, scfg);

    // classical RK4 at dt = 2^-18 as the reference
    auto rhs = [&](double u) { return -u + nl.h(u); };
    const int refine = 1 << 6;
    double u = 1.0;
    const double hstep = T / (static_cast<double>(n) * refine);
    double maxerr = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < refine; ++s) {
            const double k1 = rhs(u);
            const double k2 = rhs(u + 0.5 * hstep * k1);
            const double k3 = rhs(u + 0.5 * hstep * k2);
            const double k4 = rhs(u + hstep * k3);
            u += hstep / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        }
        maxerr = std::max(maxerr, std::abs(sol.states(i + 1, 0) - u));
    }
    checks.push_back(check("max error <= 1e-4 at dt=2^-12", maxerr <= 1e-4,
                           {{"max_error", maxerr}}));
    return {"deterministic", all_pass(checks), {{"checks", checks}}};
}

// --------------------------------------------------------------------------
// reproducibility: identical seeds give byte-identical exports

SuiteResult verify_reproducibility(std::uint64_t seed) {
    json checks = json::array();
    const TimeGrid grid(1.0, 128);
    {
        const CovarianceKernel k = CovarianceKernel::fbm(0.7);
        GaussianSampler sampler(k, grid);
        const std::string a = path_csv(sampler.sample(seed));
        const std::string b = path_csv(GaussianSampler(k, grid).sample(seed));
        checks.push_back(check("gaussian path bytes", a == b));
    }
    {
        const HermiteSampler h1(0.7, 2, grid, 256), h2(0.7, 2, grid, 256);
        const std::string a = path_csv(h1.sample(seed));
        const std::string b = path_csv(h2.sample(seed));
        checks.push_back(check("hermite path bytes", a == b));
    }
    {
        NeuronParams params;
        const NeuronModel model(params, 16);
        QSpec q;
        q.J = 4;
        const CovarianceKernel k = CovarianceKernel::fbm(0.7);
        const TimeGrid g2(1.0, 64);
        const VectorNoisePath X1 = model.assemble_noise(k, q, g2, seed);
        const VectorNoisePath X2 = model.assemble_noise(k, q, g2, seed);
        SolverConfig sc;
        const SolutionBundle s1 = solve(model.op(), model.nonlinearity(), X1,
                                        model.rest_state(), sc);
        const SolutionBundle s2 = solve(model.op(), model.nonlinearity(), X2,
                                        model.rest_state(), sc);
        checks.push_back(check("solver trajectory bytes",
                               matrix_csv(g2, s1.states) == matrix_csv(g2, s2.states)));
    }
    return {"reproducibility", all_pass(checks), {{"checks", checks}}};
}

std::vector<std::string> suite_names() {
    return {"covariance", "isometry",     "hermite",       "trace",
            "convvar",    "factorization", "hoelder",       "operator",
            "contraction", "yosida",       "deterministic", "reproducibility"};
}

SuiteResult run_suite(const std::string& name, bool quick, std::uint64_t seed) {
    if (name == "covariance") return verify_covariance(quick, seed);
    if (name == "isometry") return verify_isometry(quick, seed);
    if (name == "hermite") return verify_hermite(quick, seed);
    if (name == "trace") return verify_trace(quick, seed);
    if (name == "convvar") return verify_conv_variance(quick, seed);
    if (name == "factorization") return verify_factorization(quick, seed);
    if (name == "hoelder") return verify_hoelder(quick, seed);
    if (name == "operator") return verify_operator(seed);
    if (name == "contraction") return verify_contraction(quick, seed);
    if (name == "yosida") return verify_yosida(quick, seed);
    if (name == "deterministic") return verify_deterministic();
    if (name == "reproducibility") return verify_reproducibility(seed);
    throw config_error("unknown verify suite: " + name);
}

} // namespace fracsde
