#include "fracsde/neuron.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fracsde/noise1d.hpp"
#include "fracsde/stats.hpp"

namespace fracsde {

namespace {
OperatorSpec neuron_operator(const NeuronParams& params, int n_x) {
    NetworkCoefficients cf;
    cf.c = params.c;
    cf.cd = params.cd;
    cf.p = params.p;
    cf.pd = params.pd;
    cf.gamma = params.gamma_soma;
    cf.eps = params.eps;
    cf.lambda = params.lambda();
    return OperatorSpec::assemble(cf, n_x);
}
} // namespace

NeuronModel::NeuronModel(const NeuronParams& params, int n_x)
    : params_(params), op_(neuron_operator(params, n_x)) {
    nl_ = NonlinearitySpec::fitzhugh(params.xi);
    // Theta acts on the axon voltage only: interior u-coordinates; the
    // trace value at x = 0 belongs to the soma slot, whose F-component is 0.
    nl_.indices.resize(n_x);
    for (int i = 0; i < n_x; ++i) nl_.indices[i] = i;
}

NeuronModel build_neuron(const NeuronParams& params, int n_x) {
    return NeuronModel(params, n_x);
}

VectorNoisePath NeuronModel::assemble_noise(const CovarianceKernel& kernel,
                                            const QSpec& qspec, const TimeGrid& grid,
                                            std::uint64_t seed, int m_inner) const {
    qspec.validate();
    kernel.validate();
    const int n_x = op_.n_x();
    const int N = op_.dim();
    if (qspec.J > n_x - 1)
        throw config_error("assemble_noise: J exceeds the sine basis size n_x - 1");

    PathSampler sampler(kernel, grid, m_inner);

    // per-block sine modes sqrt(2) sin(j pi x), exactly orthonormal for the
    // trapezoid weights since the modes vanish where the half-weights sit
    struct Block {
        int offset;
        int len;
        int x_start; // grid index of the first coordinate
    };
    const Block blocks[3] = {
        {0, n_x, 1},          // u_1..u_{n_x}
        {n_x, n_x, 0},        // ud_0..ud_{n_x-1}
        {2 * n_x + 1, n_x + 1, 0}, // v_0..v_{n_x}
    };
    const bool use_block[3] = {true, true, params_.noise_on_recovery};

    VectorNoisePath X;
    X.grid = grid;
    X.seed = seed;
    X.hurst = kernel.hurst_index();
    X.values = Eigen::MatrixXd::Zero(grid.n + 1, N);

    const double h = op_.h();
    int channel = 0;
    for (int b = 0; b < 3; ++b, ++channel) {
        if (!use_block[b]) continue;
        for (int j = 1; j <= qspec.J; ++j) {
            const NoisePath x = sampler.sample(derive_seed(seed, 1000 * (channel + 1) + j));
            const double s = std::sqrt(qspec.lambda(j));
            Eigen::VectorXd mode = Eigen::VectorXd::Zero(N);
            for (int i = 0; i < blocks[b].len; ++i) {
                const double xx = (blocks[b].x_start + i) * h;
                mode(blocks[b].offset + i) = std::sqrt(2.0) * std::sin(j * M_PI * xx);
            }
            for (int t = 1; t <= grid.n; ++t)
                X.values.row(t) += s * x.values[t] * mode.transpose();
        }
    }
    return X;
}

ExperimentReport run_experiment(const NeuronModel& model, const CovarianceKernel& kernel,
                                const QSpec& qspec, const TimeGrid& grid,
                                const SolverConfig& scfg, int ensemble, std::uint64_t seed,
                                int m_inner) {
    if (ensemble < 1) throw config_error("run_experiment: ensemble >= 1");
    const OperatorSpec& op = model.op();
    const int n = grid.n;
    const int soma = 2 * model.n_x();

    ExperimentReport rep;
    rep.grid = grid;
    rep.ensemble = ensemble;
    rep.seed = seed;

    Eigen::MatrixXd soma_traces(ensemble, n + 1);
    double acorr_acc = 0.0;
    for (int e = 0; e < ensemble; ++e) {
        const VectorNoisePath X =
            model.assemble_noise(kernel, qspec, grid, derive_seed(seed, e), m_inner);
        const SolutionBundle sol = solve(op, model.nonlinearity(), X, model.rest_state(), scfg);
        for (int i = 0; i <= n; ++i) soma_traces(e, i) = sol.states(i, soma);
        rep.energy_functional_max = std::max(rep.energy_functional_max, sol.energy_functional);

        // lag T/10 autocorrelation of the soma trace
        const int lag = std::max(1, n / 10);
        std::vector<double> a, b;
        for (int i = 0; i + lag <= n; ++i) {
            a.push_back(soma_traces(e, i));
            b.push_back(soma_traces(e, i + lag));
        }
        acorr_acc += sample_correlation(a, b);
    }
    rep.soma_autocorr_lag10 = acorr_acc / ensemble;

    rep.soma_mean.resize(n + 1);
    rep.soma_q10.resize(n + 1);
    rep.soma_q50.resize(n + 1);
    rep.soma_q90.resize(n + 1);
    std::vector<double> col(ensemble);
    for (int i = 0; i <= n; ++i) {
        for (int e = 0; e < ensemble; ++e) col[e] = soma_traces(e, i);
        std::sort(col.begin(), col.end());
        rep.soma_mean[i] =
            std::accumulate(col.begin(), col.end(), 0.0) / ensemble;
        auto q = [&](double p) {
            const double idx = p * (ensemble - 1);
            const int lo = static_cast<int>(idx);
            const int hi = std::min(lo + 1, ensemble - 1);
            return col[lo] + (idx - lo) * (col[hi] - col[lo]);
        };
        rep.soma_q10[i] = q(0.1);
        rep.soma_q50[i] = q(0.5);
        rep.soma_q90[i] = q(0.9);
    }

    // contraction diagnostic with a fresh noise path
    {
        const VectorNoisePath X =
            model.assemble_noise(kernel, qspec, grid, derive_seed(seed, 777), m_inner);
        Rng rng(derive_seed(seed, 778));
        Eigen::VectorXd u1(op.dim());
        for (int i = 0; i < op.dim(); ++i) u1(i) = rng.normal();
        u1 /= op.xnorm(u1);
        const ContractionReport cr = contraction_check(op, model.nonlinearity(), X,
                                                       model.rest_state(), u1, scfg);
        rep.contraction_pass = cr.pass;
    }
    return rep;
}

} // namespace fracsde
