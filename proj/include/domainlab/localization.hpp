#ifndef DOMAINLAB_LOCALIZATION_HPP
#define DOMAINLAB_LOCALIZATION_HPP

#include <string>
#include <vector>

#include "domainlab/conditions.hpp"
#include "domainlab/grid.hpp"
#include "domainlab/visibility.hpp"

namespace domainlab {

// Discrete John localization around a ball B(x0, r): a node mask Omega_r
// with designated center z0 and the constants
//   lambda = 1 + (eps0 + 4)^2 / (4 eps0^2),   c0 = eps0^3 / (6 (eps0 + 2)),
// except in the small-domain case (no node as far as 4r/eps0 from x0) where
// the whole domain is returned with lambda = 4/eps0.
struct LocalizationResult {
    std::vector<char> region;  // node mask
    Point x0;
    double r = 0.0;
    double eps0 = 0.0;
    Point z0;
    uint32_t z0_node = 0;
    double lambda = 0.0;
    double c0 = 0.0;
    bool whole_domain = false;

    bool sandwich_ok = false;
    bool john_ok = false;
    double john_constant = -1.0;  // measured on the region subgrid
    std::vector<Point> witnesses;

    // Pairs whose best candidate curve fell short of the asserted eps0.
    std::vector<Point> eps_deficit_points;
    std::string winning_alphas;
};

// Discretization allowance on the John constant check.
inline constexpr double kJohnVerifyTolerance = 0.25;

LocalizationResult localize(const Grid& g, const VisibilityGraph& vg, const Point& x0, double r,
                            double eps0);

// Fills sandwich_ok / john_ok / witnesses on a result produced by localize
// over the same grid.
LocalizationResult verify_localization(const Grid& g, LocalizationResult res, const Point& x0,
                                       double r, const Sampler& s);

// Distance from every region node to the complement of the region (exposed
// cell edges or the domain boundary, whichever is closer). Exposed for reuse
// in tests.
std::vector<double> region_boundary_distance(const Grid& g, const std::vector<char>& region);

}  // namespace domainlab

#endif
