#ifndef DOMAINLAB_CURVE_HPP
#define DOMAINLAB_CURVE_HPP

#include <vector>

#include "domainlab/geometry.hpp"

namespace domainlab {

// Arclength-parametrized polyline. cumulative_length()[i] is the arclength
// from the first vertex to vertex i; strictly increasing.
class Curve {
  public:
    Curve() = default;
    explicit Curve(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    const std::vector<double>& cumulative_length() const { return cum_; }
    double length() const { return cum_.empty() ? 0.0 : cum_.back(); }
    bool empty() const { return verts_.empty(); }
    size_t size() const { return verts_.size(); }

    Point front() const { return verts_.front(); }
    Point back() const { return verts_.back(); }

    // Point at arclength t (clamped to [0, length]).
    Point point_at(double t) const;

    // Subcurve between arclengths t0 <= t1; keeps arclength bookkeeping.
    Curve subcurve(double t0, double t1) const;

    // Vertices plus intermediate samples so consecutive samples are at most
    // `step` apart in arclength. Returns (point, arclength) pairs.
    std::vector<std::pair<Point, double>> sample(double step) const;

  private:
    std::vector<Point> verts_;
    std::vector<double> cum_;
};

}  // namespace domainlab

#endif
