#ifndef DOMAINLAB_GEODESIC_HPP
#define DOMAINLAB_GEODESIC_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "domainlab/curve.hpp"
#include "domainlab/grid.hpp"

namespace domainlab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Minimizer of the weighted length functional  integral of
// dist(z, boundary)^(alpha-1) |dz|  over grid paths. For alpha = 1 the value
// is the path length; for alpha = 0 it is the quasihyperbolic length.
struct GeodesicResult {
    Curve curve;
    double value = kInfinity;
    double alpha = 1.0;
    Point from, to;

    bool reachable() const { return value < kInfinity; }
};

struct ShortestPathField {
    std::vector<double> dist;
    std::vector<int32_t> parent;
};

// Single-source weighted Dijkstra over the grid graph. Edge weight is
// length * mid_dist^(alpha-1) (midpoint quadrature of the integrand). For
// alpha < 1, nodes closer than h/2 to the boundary are excluded so the
// integrand stays bounded. `cutoff` truncates the search.
ShortestPathField grid_distance_field(const Grid& g, uint32_t source, double alpha,
                                      double cutoff = kInfinity,
                                      const std::vector<char>* keep = nullptr);

Curve path_from_field(const Grid& g, const ShortestPathField& f, uint32_t target);

GeodesicResult weighted_geodesic(const Grid& g, const Point& x, const Point& y, double alpha);

double quasihyperbolic_distance(const Grid& g, const Point& x, const Point& y);

struct IntrinsicBall {
    Point center;
    double radius = 0.0;
    std::vector<uint32_t> node_set;  // nodes with d_Omega(center, node) < radius
    double measure = 0.0;            // node count * h^2
};

IntrinsicBall intrinsic_ball(const Grid& g, const Point& x, double r);

// Integral of dist^(alpha-1) along an explicit curve, midpoint quadrature at
// arclength step h/2. Used for re-integration checks and cigar diagnostics.
double curve_weighted_length(const PolygonalDomain& d, const Curve& c, double alpha, double step);

}  // namespace domainlab

#endif
