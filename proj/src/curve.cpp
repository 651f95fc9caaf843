#include "domainlab/curve.hpp"

#include <algorithm>
#include <cmath>

namespace domainlab {

Curve::Curve(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    cum_.reserve(verts_.size());
    double acc = 0.0;
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i > 0) {
            double step = distance(verts_[i - 1], verts_[i]);
            if (step == 0.0) continue;  // collapse repeated vertices
            acc += step;
        }
        if (i > 0 && verts_[i] == verts_[i - 1]) continue;
        cum_.push_back(acc);
    }
    // Drop repeated vertices to keep cumulative lengths strictly increasing.
    std::vector<Point> dedup;
    dedup.reserve(verts_.size());
    for (const Point& p : verts_) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    verts_ = std::move(dedup);
    cum_.clear();
    cum_.reserve(verts_.size());
    double a = 0.0;
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i > 0) a += distance(verts_[i - 1], verts_[i]);
        cum_.push_back(a);
    }
}

Point Curve::point_at(double t) const {
    if (verts_.empty()) return {};
    if (t <= 0.0) return verts_.front();
    if (t >= length()) return verts_.back();
    auto it = std::upper_bound(cum_.begin(), cum_.end(), t);
    size_t i = static_cast<size_t>(it - cum_.begin());
    double seg = cum_[i] - cum_[i - 1];
    double a = (t - cum_[i - 1]) / seg;
    const Point& p = verts_[i - 1];
    const Point& q = verts_[i];
    return {p.x + a * (q.x - p.x), p.y + a * (q.y - p.y)};
}

Curve Curve::subcurve(double t0, double t1) const {
    t0 = std::clamp(t0, 0.0, length());
    t1 = std::clamp(t1, t0, length());
    std::vector<Point> pts;
    pts.push_back(point_at(t0));
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (cum_[i] > t0 && cum_[i] < t1) pts.push_back(verts_[i]);
    }
    pts.push_back(point_at(t1));
    return Curve(std::move(pts));
}

std::vector<std::pair<Point, double>> Curve::sample(double step) const {
    std::vector<std::pair<Point, double>> out;
    if (verts_.empty()) return out;
    out.emplace_back(verts_[0], 0.0);
    for (size_t i = 1; i < verts_.size(); ++i) {
        double seg = cum_[i] - cum_[i - 1];
        int pieces = std::max(1, static_cast<int>(std::ceil(seg / step)));
        for (int k = 1; k <= pieces; ++k) {
            double a = static_cast<double>(k) / pieces;
            Point p{verts_[i - 1].x + a * (verts_[i].x - verts_[i - 1].x),
                    verts_[i - 1].y + a * (verts_[i].y - verts_[i - 1].y)};
            out.emplace_back(p, cum_[i - 1] + a * seg);
        }
    }
    return out;
}

}  // namespace domainlab
