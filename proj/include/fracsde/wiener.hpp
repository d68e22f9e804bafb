#ifndef FRACSDE_WIENER_HPP
#define FRACSDE_WIENER_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "fracsde/covariance.hpp"
#include "fracsde/noise1d.hpp"

namespace fracsde {

// Piecewise-constant f = sum c_i 1_{[t_i, t_{i+1})}.
struct StepFunction {
    std::vector<double> breaks; // 0 = t_0 < ... < t_n = T
    std::vector<double> coef;   // size breaks.size() - 1

    StepFunction() = default;
    StepFunction(std::vector<double> b, std::vector<double> c);
    static StepFunction indicator(double a, double b, double T);

    double operator()(double u) const;
    double horizon() const { return breaks.empty() ? 0.0 : breaks.back(); }
};

// Deterministic integrand: a step function or a bounded callable.
class Integrand {
  public:
    Integrand(StepFunction sf); // NOLINT(google-explicit-constructor)
    Integrand(std::function<double(double)> f, double bound);

    bool is_step() const { return is_step_; }
    const StepFunction& step() const;
    double operator()(double u) const;
    double bound() const { return bound_; }

  private:
    bool is_step_;
    StepFunction sf_;
    std::function<double(double)> fn_;
    double bound_;
};

struct QuadratureOptions {
    int cells = 256;      // base uniform partition of [0,T]
    int axis_refine = 8;  // extra geometric subdivisions of the first cell
};

// <f,h>_H = int int f(u) h(v) d2R/dudv du dv.  The |t-s|^{2H-2}-type part
// of the density is integrated exactly per cell pair against the
// piecewise-constant projections of f and h (closed-form antiderivative of
// the power kernel), which keeps the diagonal singularity exact; the smooth
// g part (bifbm R1) uses a tensor Gauss rule.  Step-function breakpoints are
// inserted into the partition, so step integrands are handled exactly up to
// the g-part quadrature.
double h_inner(const Integrand& f, const Integrand& h, const CovarianceKernel& kernel,
               double T, QuadratureOptions opt = {});

// ||f||^2_H with a refinement-based Cauchy check; throws numerical_error
// ("not in |H|") when the estimates diverge under refinement.
double h_norm_sq(const Integrand& f, const CovarianceKernel& kernel, double T,
                 QuadratureOptions opt = {});

// I(f) = sum c_i (X_{t_{i+1}} - X_{t_i}); breakpoints snapped to the path
// grid (tolerance half a step, round half up).
double wiener_integral_step(const StepFunction& f, const NoisePath& path);

// Wiener integral of a general integrand via its left-point step
// approximation on the path's grid.
double wiener_integral_fn(const Integrand& f, const NoisePath& path);

// Transfer-operator route for Hermite drivers:
//   int_0^T f dZ = I_q( f -> int_{max y}^T f(u) prod_j d1K(u,y_j) du )
// evaluated as a discrete multiple Wiener-Ito sum against the same inner
// increments the sampler uses, so f == 1 reproduces Z_T bit for bit.
Eigen::MatrixXd transfer_operator(const Integrand& f, const HermiteSampler& sampler);
double transfer_integral(const Integrand& f, const HermiteSampler& sampler,
                         std::uint64_t seed);

struct HyperRatio {
    double ratio;  // E|I|^{2m} / (E I^2)^m
    double bound;  // pinned constant c_m
    bool pass;
};

// Hypercontractivity witness for chaos orders m in {1,2}; c_1 = 3,
// c_2 = 15 (conservative; the sharp constant is not pinned by the theory
// we implement).
HyperRatio hypercontractivity_check(const std::vector<double>& samples, int m);

} // namespace fracsde

#endif
