#ifndef DOMAINLAB_DOMAIN_HPP
#define DOMAINLAB_DOMAIN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domainlab/geometry.hpp"

namespace domainlab {

// Planar polygonal domain: one counterclockwise outer ring, clockwise hole
// rings strictly inside it. The open region between them is the domain.
// Immutable after construction; safe for concurrent reads.
class PolygonalDomain {
  public:
    PolygonalDomain(Ring outer, std::vector<Ring> holes, std::string name = "",
                    std::map<std::string, std::string> metadata = {});

    const Ring& outer() const { return outer_; }
    const std::vector<Ring>& holes() const { return holes_; }
    const std::string& name() const { return name_; }
    const std::map<std::string, std::string>& metadata() const { return metadata_; }

    double diameter() const { return diameter_; }
    double area() const { return area_; }

    // All boundary segments (outer ring + holes), in ring order.
    const std::vector<Segment>& boundary() const { return boundary_; }

    // Strict interior membership, even-odd rule; boundary points are outside.
    bool contains(const Point& p) const;
    // Interior or boundary.
    bool contains_closed(const Point& p) const;

    // Euclidean distance to the union of boundary segments. Requires
    // contains(p); throws config_error otherwise.
    double boundary_distance(const Point& p) const;
    // Same, without the membership requirement.
    double distance_to_boundary_unchecked(const Point& p) const;

    // The straight segment [a,b] between two interior points stays inside
    // the open domain.
    bool segment_inside(const Point& a, const Point& b) const;

    // The segment [a,b] lies in the closed domain: no proper crossing and
    // every maximal sub-interval midpoint is interior-or-boundary. Used for
    // shortest paths, which may run along the boundary.
    bool segment_in_closure(const Point& a, const Point& b) const;

    PolygonalDomain similarity_transform(double scale, double rotation, Point shift) const;

    Point bbox_min() const { return bbox_min_; }
    Point bbox_max() const { return bbox_max_; }

  private:
    Ring outer_;
    std::vector<Ring> holes_;
    std::string name_;
    std::map<std::string, std::string> metadata_;
    std::vector<Segment> boundary_;
    double diameter_ = 0.0;
    double area_ = 0.0;
    Point bbox_min_, bbox_max_;

    void validate() const;
};

// Line-oriented text format:
//   outer: x y; x y; ...
//   hole: x y; ...
//   meta: key=value
// '#' starts a comment. Round-trips bit-exactly through serialize_domain.
PolygonalDomain parse_domain(const std::string& text);
std::string serialize_domain(const PolygonalDomain& d);

PolygonalDomain load_domain_file(const std::string& path);

}  // namespace domainlab

#endif
