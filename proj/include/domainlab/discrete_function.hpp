#ifndef DOMAINLAB_DISCRETE_FUNCTION_HPP
#define DOMAINLAB_DISCRETE_FUNCTION_HPP

#include <span>
#include <vector>

#include "domainlab/grid.hpp"

namespace domainlab {

// Real-valued function on grid nodes.
struct DiscreteFunction {
    const Grid* grid = nullptr;
    std::vector<double> values;

    DiscreteFunction() = default;
    explicit DiscreteFunction(const Grid& g, double fill = 0.0)
        : grid(&g), values(g.node_count(), fill) {}

    double operator[](size_t i) const { return values[i]; }
    double& operator[](size_t i) { return values[i]; }
};

// Forward-difference gradient with one-sided fallback where the forward
// neighbor is missing; zero component when both directions are absent.
Point discrete_gradient(const DiscreteFunction& u, size_t i);

// (sum over region of |grad u|^p h^2)^(1/p)
double p_dirichlet_energy(const DiscreteFunction& u, std::span<const uint32_t> region, double p);

double mean_over(const DiscreteFunction& u, std::span<const uint32_t> region);

}  // namespace domainlab

#endif
