#include "domainlab/discrete_function.hpp"

#include <cmath>

namespace domainlab {

Point discrete_gradient(const DiscreteFunction& u, size_t i) {
    const Grid& g = *u.grid;
    const auto& ax = g.axis_neighbors(i);
    double h = g.spacing();
    double dx = 0.0, dy = 0.0;
    if (ax[0] >= 0)
        dx = (u.values[static_cast<size_t>(ax[0])] - u.values[i]) / h;
    else if (ax[1] >= 0)
        dx = (u.values[i] - u.values[static_cast<size_t>(ax[1])]) / h;
    if (ax[2] >= 0)
        dy = (u.values[static_cast<size_t>(ax[2])] - u.values[i]) / h;
    else if (ax[3] >= 0)
        dy = (u.values[i] - u.values[static_cast<size_t>(ax[3])]) / h;
    return {dx, dy};
}

double p_dirichlet_energy(const DiscreteFunction& u, std::span<const uint32_t> region, double p) {
    const Grid& g = *u.grid;
    double cell = g.cell_area();
    double acc = 0.0;
    for (uint32_t i : region) {
        Point grad = discrete_gradient(u, i);
        double mag = std::hypot(grad.x, grad.y);
        if (mag > 0.0) acc += std::pow(mag, p) * cell;
    }
    return std::pow(acc, 1.0 / p);
}

double mean_over(const DiscreteFunction& u, std::span<const uint32_t> region) {
    if (region.empty()) return 0.0;
    double acc = 0.0;
    for (uint32_t i : region) acc += u.values[i];
    return acc / static_cast<double>(region.size());
}

}  // namespace domainlab
