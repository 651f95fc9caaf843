#ifndef DOMAINLAB_GEOMETRY_HPP
#define DOMAINLAB_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace domainlab {

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double distance(const Point& a, const Point& b) { return norm(b - a); }

struct Segment {
    Point a;
    Point b;
};

// Sign of the signed area of triangle (a, b, c): > 0 for counterclockwise,
// < 0 for clockwise, == 0 for collinear. Exact: a floating-point filter
// backed by an adaptive expansion evaluation, so near-degenerate slit
// geometry cannot flip the sign.
double orient2d(const Point& a, const Point& b, const Point& c);
inline int orient2d_sign(const Point& a, const Point& b, const Point& c) {
    double d = orient2d(a, b, c);
    return (d > 0.0) - (d < 0.0);
}

// p lies on the closed segment [a, b] (collinear and within the bounding box).
bool on_segment(const Point& a, const Point& b, const Point& p);

// Closed segments [a,b] and [c,d] share at least one point (crossing,
// touching, or collinear overlap).
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// Interiors cross transversally (strict sign opposition on both sides).
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

double point_segment_distance(const Point& p, const Point& a, const Point& b);

// Parameters t in [0,1] of every contact between [a,b] and [c,d], inexact but
// sufficient for interval subdivision once proper crossings were excluded
// exactly. Collinear overlap contributes the overlap endpoints.
void segment_contact_params(const Point& a, const Point& b, const Point& c, const Point& d,
                            std::vector<double>& out);

using Ring = std::vector<Point>;

double ring_signed_area(const Ring& r);
bool ring_is_simple(const Ring& r);

// Even-odd test against one ring; points exactly on the boundary report
// the `boundary_value` argument.
bool point_in_ring(const Ring& r, const Point& p, bool boundary_value);
bool point_on_ring(const Ring& r, const Point& p);

}  // namespace domainlab

#endif
