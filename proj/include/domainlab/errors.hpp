#ifndef DOMAINLAB_ERRORS_HPP
#define DOMAINLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace domainlab {

// Bad input files, invalid geometry, out-of-range configs. CLI exit code 1.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solvers failing to converge within budget. CLI exit code 2.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace domainlab

#endif
