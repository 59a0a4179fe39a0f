#pragma once

#include <stdexcept>
#include <string>

namespace cll {

// Configuration / input validation failure. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A computed quantity left the finite range. CLI maps this to exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Time integration produced a non-finite state at time t.
struct BlowUpError : NumericalError {
    BlowUpError(const std::string& what, double t) : NumericalError(what), blowup_time(t) {}
    double blowup_time;
};

// Square-root argument went negative at a grid point. CLI maps this to exit
// code 4.
struct SqrtDomainError : std::domain_error {
    SqrtDomainError(const std::string& what, double x, int index)
        : std::domain_error(what), x(x), index(index) {}
    double x;
    int index;
};

}  // namespace cll
