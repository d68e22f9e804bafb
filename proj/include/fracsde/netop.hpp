#ifndef FRACSDE_NETOP_HPP
#define FRACSDE_NETOP_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fracsde/errors.hpp"

namespace fracsde {

// Variable coefficients of the network generator on X = (L^2)^2 x R x L^2.
// lambda is the dissipativity shift moved from the nonlinearity into the
// operator's u-row; the standing assumption p - lambda > 0 is checked on
// the grid at assembly.
struct NetworkCoefficients {
    std::function<double(double)> c = [](double) { return 1.0; };
    std::function<double(double)> cd = [](double) { return 1.0; };
    std::function<double(double)> p = [](double) { return 1.0; };
    std::function<double(double)> pd = [](double) { return 1.0; };
    double gamma = 1.0; // soma damping (gamma_soma; distinct from gamma_frac)
    double eps = 1.0;
    double lambda = 0.0;
};

// Constrained state (u, u_d, d, v) with the trace coupling
// u(0) = u_d(1) = d.  Fields keep the full n_x+1 samples per edge.
struct StateVector {
    Eigen::VectorXd u;
    Eigen::VectorXd ud;
    double d = 0.0;
    Eigen::VectorXd v;

    void enforce_trace() {
        if (u.size()) u(0) = d;
        if (ud.size()) ud(ud.size() - 1) = d;
    }
    bool trace_ok(double tol = 1e-10) const {
        return u.size() && ud.size() && std::abs(u(0) - d) <= tol &&
               std::abs(ud(ud.size() - 1) - d) <= tol;
    }
};

// Assembled generator: finite differences in flux form with harmonic-mean
// face coefficients, ghost points at the Neumann ends, trace constraints
// eliminated into the soma unknown.  Unknown layout:
//   [ u_1..u_{n_x} | ud_0..ud_{n_x-1} | d | v_0..v_{n_x} ],  N = 3 n_x + 2.
class OperatorSpec {
  public:
    static OperatorSpec assemble(const NetworkCoefficients& coeffs, int n_x);
    // Generic wrapper (scalar test problems etc.); weights default to ones.
    static OperatorSpec from_matrix(const Eigen::MatrixXd& A,
                                    Eigen::VectorXd weights = Eigen::VectorXd());

    int dim() const { return static_cast<int>(A_.rows()); }
    bool is_network() const { return n_x_ > 0; }
    int n_x() const { return n_x_; }
    double h() const { return h_; }
    const Eigen::MatrixXd& matrix() const { return A_; }
    const Eigen::VectorXd& weights() const { return w_; }
    const NetworkCoefficients& coefficients() const;

    // coefficients sampled at assembly (faces hold harmonic means)
    struct GridSamples {
        std::vector<double> p, pd, cface, cdface;
        double gamma = 0.0, eps = 0.0;
    };
    const GridSamples& grid_samples() const { return samples_; }

    // discrete X inner product / norms
    double xdot(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
    double xnorm(const Eigen::VectorXd& a) const { return std::sqrt(xdot(a, a)); }
    // discrete V-norm: X-norm plus the H^1 difference quotients on the edges
    double vnorm_sq(const Eigen::VectorXd& a) const;

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return A_ * x; }

    // e^{tA} x by scaling-and-squaring matrix exponential
    Eigen::VectorXd semigroup_apply(double t, const Eigen::VectorXd& x) const;
    Eigen::MatrixXd semigroup_matrix(double t) const;
    // operator norm of e^{tA} in the weighted X-norm
    double semigroup_norm(double t) const;

    // || (-A)^{gamma_frac} x ||_X via Schur-based real matrix powers
    double fractional_power_norm(double gamma_frac, const Eigen::VectorXd& x) const;

    // stability constants
    double max_re_eig() const { return max_re_; }
    double omega() const { return omega_; }           // 0.9 * spectral gap
    double big_m() const { return M_; }                // fitted ||S(t)|| <= M e^{-wt}
    double omega_diss() const { return omega_diss_; }  // exact discrete X-rate
    double omega_form() const { return omega_form_; }  // form coercivity vs V-norm

    // state packing (network operators only)
    Eigen::VectorXd pack(const StateVector& s) const;
    StateVector unpack(const Eigen::VectorXd& x) const;

    std::string triplet_export() const; // "row col value" lines

  private:
    OperatorSpec() = default;
    void finalize();

    Eigen::MatrixXd A_;
    Eigen::VectorXd w_;
    int n_x_ = 0;
    double h_ = 0.0;
    NetworkCoefficients coeffs_;
    GridSamples samples_;
    bool has_coeffs_ = false;

    double max_re_ = 0.0, omega_ = 0.0, M_ = 1.0;
    double omega_diss_ = 0.0, omega_form_ = 0.0;
};

// The sesquilinear form of the paper over the reals, by trapezoidal
// quadrature with cellwise difference quotients:
//   a(u1,u2) = int p u1 u2 + c u1' u2' + int pd ud1 ud2 + cd ud1' ud2'
//            + int (u1 v2 - v1 u2) + eps int v1 v2 + gamma d1 d2.
double apply_form(const OperatorSpec& spec, const StateVector& s1, const StateVector& s2);

// Random constrained state for diagnostics and tests.
StateVector random_state(const OperatorSpec& spec, std::uint64_t seed);

} // namespace fracsde

#endif
