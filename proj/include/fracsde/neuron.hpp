#ifndef FRACSDE_NEURON_HPP
#define FRACSDE_NEURON_HPP

#include <cstdint>
#include <optional>

#include "fracsde/qnoise.hpp"
#include "fracsde/solver.hpp"

namespace fracsde {

// Concrete FitzHugh-Nagumo axon + Rall dendrite + dynamic soma model.
struct NeuronParams {
    double xi = 0.5; // FitzHugh threshold
    double gamma_soma = 1.0;
    double eps = 1.0;
    std::function<double(double)> c = [](double) { return 1.0; };
    std::function<double(double)> cd = [](double) { return 1.0; };
    std::function<double(double)> p = [](double) { return 1.0; };
    std::function<double(double)> pd = [](double) { return 1.0; };
    bool noise_on_recovery = true; // zeta^v channel switch

    double lambda() const { return (xi * xi - xi + 1.0) / 3.0; }
};

// Assembled model: operator, u-block nonlinearity, and the per-channel
// noise layout B(t) = (zeta^u, zeta^d, 0, zeta^v) in the state ordering
// (u, u_d, d, v) - the soma coordinate carries no noise.
class NeuronModel {
  public:
    NeuronModel(const NeuronParams& params, int n_x);

    const OperatorSpec& op() const { return op_; }
    const NonlinearitySpec& nonlinearity() const { return nl_; }
    const NeuronParams& params() const { return params_; }
    int n_x() const { return op_.n_x(); }

    // Independent q-noise on the u, u_d and v blocks embedded into the
    // unknown vector; sine modes are exactly orthonormal for the discrete
    // weighted X inner product.
    VectorNoisePath assemble_noise(const CovarianceKernel& kernel, const QSpec& qspec,
                                   const TimeGrid& grid, std::uint64_t seed,
                                   int m_inner = 0) const;

    Eigen::VectorXd rest_state() const { return Eigen::VectorXd::Zero(op_.dim()); }

  private:
    NeuronParams params_;
    OperatorSpec op_;
    NonlinearitySpec nl_;
};

NeuronModel build_neuron(const NeuronParams& params, int n_x);

struct ExperimentReport {
    TimeGrid grid;
    std::vector<double> soma_mean;     // ensemble mean trace
    std::vector<double> soma_q10, soma_q50, soma_q90;
    double energy_functional_max = 0.0;
    double soma_autocorr_lag10 = 0.0;  // soma-trace autocorrelation at lag T/10
    bool contraction_pass = false;
    int ensemble = 0;
    std::uint64_t seed = 0;
};

ExperimentReport run_experiment(const NeuronModel& model, const CovarianceKernel& kernel,
                                const QSpec& qspec, const TimeGrid& grid,
                                const SolverConfig& scfg, int ensemble, std::uint64_t seed,
                                int m_inner = 0);

} // namespace fracsde

#endif
