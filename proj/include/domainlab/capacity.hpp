#ifndef DOMAINLAB_CAPACITY_HPP
#define DOMAINLAB_CAPACITY_HPP

#include <cstdint>
#include <vector>

#include "domainlab/grid.hpp"

namespace domainlab {

// Condenser problem: disjoint node sets U (potential 1) and V (potential 0)
// with positive separation, exponent p in (1, inf).
struct CapacityProblem {
    std::vector<uint32_t> U;
    std::vector<uint32_t> V;
    double p = 2.0;
};

struct CapacityResult {
    double value = 0.0;
    std::vector<double> potential;  // minimizing u over all grid nodes
};

// Infimal discrete p-Dirichlet energy among functions with u = 1 on U,
// u = 0 on V, values in [0, 1]. p = 2 solves the linear system by conjugate
// gradients; other p run projected gradient descent on the convex energy to
// relative tolerance 1e-6.
CapacityResult capacity(const Grid& g, const CapacityProblem& prob);

}  // namespace domainlab

#endif
