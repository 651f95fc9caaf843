#include "domainlab/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "domainlab/errors.hpp"

namespace domainlab {

ShortestPathField grid_distance_field(const Grid& g, uint32_t source, double alpha, double cutoff,
                                      const std::vector<char>* keep) {
    if (alpha < 0.0 || alpha > 1.0) throw config_error("alpha must lie in [0, 1]");
    size_t n = g.node_count();
    ShortestPathField f;
    f.dist.assign(n, kInfinity);
    f.parent.assign(n, -1);

    double min_dist = (alpha < 1.0) ? 0.5 * g.spacing() : 0.0;
    auto ok = [&](uint32_t v) {
        if (keep && !(*keep)[v]) return false;
        return g.dist(v) >= min_dist;
    };
    if (!ok(source)) return f;

    using QE = std::pair<double, uint32_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    f.dist[source] = 0.0;
    pq.push({0.0, source});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > f.dist[u]) continue;
        if (du > cutoff) break;
        for (const Grid::Edge& e : g.neighbors(u)) {
            if (!ok(e.to)) continue;
            double w = (alpha == 1.0) ? e.length : e.length * std::pow(e.mid_dist, alpha - 1.0);
            double nd = du + w;
            if (nd < f.dist[e.to]) {
                f.dist[e.to] = nd;
                f.parent[e.to] = static_cast<int32_t>(u);
                pq.push({nd, e.to});
            }
        }
    }
    return f;
}

Curve path_from_field(const Grid& g, const ShortestPathField& f, uint32_t target) {
    if (f.dist[target] == kInfinity) return Curve();
    std::vector<Point> pts;
    int32_t v = static_cast<int32_t>(target);
    while (v >= 0) {
        pts.push_back(g.node(static_cast<size_t>(v)));
        v = f.parent[static_cast<size_t>(v)];
    }
    std::reverse(pts.begin(), pts.end());
    return Curve(std::move(pts));
}

GeodesicResult weighted_geodesic(const Grid& g, const Point& x, const Point& y, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw config_error("alpha must lie in [0, 1]");
    uint32_t sx = g.snap(x);
    uint32_t sy = g.snap(y);
    GeodesicResult res;
    res.alpha = alpha;
    res.from = g.node(sx);
    res.to = g.node(sy);
    if (sx == sy) {
        res.curve = Curve({g.node(sx)});
        res.value = 0.0;
        return res;
    }
    ShortestPathField f = grid_distance_field(g, sx, alpha);
    res.value = f.dist[sy];
    if (res.reachable()) res.curve = path_from_field(g, f, sy);
    return res;
}

double quasihyperbolic_distance(const Grid& g, const Point& x, const Point& y) {
    return weighted_geodesic(g, x, y, 0.0).value;
}

IntrinsicBall intrinsic_ball(const Grid& g, const Point& x, double r) {
    if (r <= 0.0) throw config_error("intrinsic_ball: radius must be positive");
    uint32_t s = g.snap(x);
    IntrinsicBall ball;
    ball.center = g.node(s);
    ball.radius = r;
    ShortestPathField f = grid_distance_field(g, s, 1.0, r);
    for (size_t i = 0; i < g.node_count(); ++i) {
        if (f.dist[i] < r) ball.node_set.push_back(static_cast<uint32_t>(i));
    }
    ball.measure = static_cast<double>(ball.node_set.size()) * g.cell_area();
    return ball;
}

double curve_weighted_length(const PolygonalDomain& d, const Curve& c, double alpha, double step) {
    if (c.size() < 2) return 0.0;
    auto samples = c.sample(step);
    double total = 0.0;
    for (size_t i = 1; i < samples.size(); ++i) {
        double seg = samples[i].second - samples[i - 1].second;
        if (seg <= 0.0) continue;
        Point mid{0.5 * (samples[i].first.x + samples[i - 1].first.x),
                  0.5 * (samples[i].first.y + samples[i - 1].first.y)};
        double dist = d.distance_to_boundary_unchecked(mid);
        if (dist <= 0.0) return kInfinity;
        total += seg * std::pow(dist, alpha - 1.0);
    }
    return total;
}

}  // namespace domainlab
