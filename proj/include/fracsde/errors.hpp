#ifndef FRACSDE_ERRORS_HPP
#define FRACSDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracsde {

// Invalid parameters, domains, or configuration (CLI exit code 2).
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical failures: non-PSD Gram matrices, divergent quadratures,
// blow-up detection, defective decompositions (CLI exit code 1).
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Not enough samples / degenerate statistics for an estimator.
struct stats_error : std::runtime_error {
    explicit stats_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A user-supplied callable violated its declared contract
// (e.g. a non-dissipative nonlinearity handed to the Yosida resolvent).
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fracsde

#endif
