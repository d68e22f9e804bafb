#ifndef FRACSDE_VERIFY_HPP
#define FRACSDE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fracsde {

struct SuiteResult {
    std::string suite;
    bool pass = false;
    nlohmann::json details;
};

// Each suite checks one analytically verifiable identity of the library at
// the tolerances the acceptance gate pins.  `quick` shrinks ensembles and
// resolutions for interactive runs; the acceptance suite runs quick = false.
SuiteResult verify_covariance(bool quick, std::uint64_t seed);    // Cholesky law vs closed forms
SuiteResult verify_isometry(bool quick, std::uint64_t seed);      // E I(f)^2 = ||f||_H^2
SuiteResult verify_hermite(bool quick, std::uint64_t seed);       // Rosenblatt law
SuiteResult verify_trace(bool quick, std::uint64_t seed);         // E||X_t||^2 = TrQ R(t,t)
SuiteResult verify_conv_variance(bool quick, std::uint64_t seed); // scalar convolution variance
SuiteResult verify_factorization(bool quick, std::uint64_t seed); // R_{a,0} Y_a == W_A
SuiteResult verify_hoelder(bool quick, std::uint64_t seed);       // regularity exponents
SuiteResult verify_operator(std::uint64_t seed);                  // spectrum, form, coercivity
SuiteResult verify_contraction(bool quick, std::uint64_t seed);   // Gronwall decay
SuiteResult verify_yosida(bool quick, std::uint64_t seed);        // Cauchy rate + energy band
SuiteResult verify_deterministic();                               // zero-noise reference solve
SuiteResult verify_reproducibility(std::uint64_t seed);           // byte-identical reruns

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, bool quick, std::uint64_t seed);

} // namespace fracsde

#endif
