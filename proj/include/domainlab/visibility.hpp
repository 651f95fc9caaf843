#ifndef DOMAINLAB_VISIBILITY_HPP
#define DOMAINLAB_VISIBILITY_HPP

#include <memory>

#include "domainlab/curve.hpp"
#include "domainlab/domain.hpp"

namespace domainlab {

// Exact Euclidean shortest paths inside the closed polygon-with-holes,
// computed on the visibility graph over the polygon vertices. Paths may run
// along the boundary; the infimum of interior curve lengths equals the
// closure shortest path for polygonal domains.
class VisibilityGraph {
  public:
    explicit VisibilityGraph(std::shared_ptr<const PolygonalDomain> domain);

    struct PathResult {
        Curve curve;
        double length;  // infinity when the points are not connected
    };

    PathResult shortest_path(const Point& x, const Point& y) const;
    double distance(const Point& x, const Point& y) const;

    const PolygonalDomain& domain() const { return *domain_; }

  private:
    std::shared_ptr<const PolygonalDomain> domain_;
    std::vector<Point> verts_;
    std::vector<std::vector<std::pair<uint32_t, double>>> adj_;
};

// Shortest-path length between interior points x and y; infinity when they
// lie in different components. Throws config_error if an endpoint is outside.
double intrinsic_distance(const PolygonalDomain& d, const Point& x, const Point& y);

}  // namespace domainlab

#endif
