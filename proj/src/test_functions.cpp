#include "domainlab/test_functions.hpp"

#include <cmath>

#include "domainlab/errors.hpp"
#include "domainlab/geodesic.hpp"

namespace domainlab {

DiscreteFunction annulus_test_function(const Grid& g, const Point& x, double r, double b_prev,
                                       double b_next) {
    if (!(0.0 < b_next && b_next < b_prev && b_prev <= 1.0))
        throw config_error("annulus_test_function: need 0 < b_next < b_prev <= 1");
    uint32_t s = g.snap(x);
    double outer = b_prev * r;
    double inner = b_next * r;
    ShortestPathField f = grid_distance_field(g, s, 1.0, outer + 2.0 * g.spacing());

    DiscreteFunction u(g, 0.0);
    for (size_t i = 0; i < g.node_count(); ++i) {
        double d = f.dist[i];
        if (d < inner) {
            u.values[i] = 1.0;
        } else if (d < outer) {
            u.values[i] = (outer - d) / (outer - inner);
        }
    }
    return u;
}

DiscreteFunction log_test_function(const Grid& g, const Point& x0, double r, double b,
                                   const Point& component_seed) {
    if (!(b > 0.0 && b < 1.0 / 16.0))
        throw config_error("log_test_function: b must lie in (0, 1/16)");
    uint32_t seed = g.snap(component_seed);
    double br = b * r;
    if (distance(g.node(seed), x0) < br)
        throw config_error("log_test_function: component seed inside B(x0, b r)");

    std::vector<char> keep(g.node_count(), 0);
    for (size_t i = 0; i < g.node_count(); ++i) keep[i] = distance(g.node(i), x0) >= br;
    std::vector<int32_t> comp = induced_components(g, keep);
    int32_t target = comp[seed];

    double denom = std::log(1.0 / (2.0 * b));
    DiscreteFunction u(g, 0.0);
    for (size_t i = 0; i < g.node_count(); ++i) {
        if (comp[i] != target) continue;
        double rho = distance(g.node(i), x0);
        if (rho >= 0.5 * r) {
            u.values[i] = 1.0;
        } else {
            u.values[i] = std::log(rho / br) / denom;
        }
    }
    return u;
}

}  // namespace domainlab
