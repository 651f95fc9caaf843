#include "domainlab/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "domainlab/errors.hpp"

namespace domainlab {

namespace {
inline double euclid(const Point& a, const Point& b) { return domainlab::distance(a, b); }
constexpr double kInf = std::numeric_limits<double>::infinity();
}

VisibilityGraph::VisibilityGraph(std::shared_ptr<const PolygonalDomain> domain)
    : domain_(std::move(domain)) {
    const PolygonalDomain& d = *domain_;
    verts_ = d.outer();
    for (const Ring& h : d.holes()) verts_.insert(verts_.end(), h.begin(), h.end());

    adj_.resize(verts_.size());
    for (size_t i = 0; i < verts_.size(); ++i) {
        for (size_t j = i + 1; j < verts_.size(); ++j) {
            if (verts_[i] == verts_[j]) continue;
            if (d.segment_in_closure(verts_[i], verts_[j])) {
                double len = euclid(verts_[i], verts_[j]);
                adj_[i].emplace_back(static_cast<uint32_t>(j), len);
                adj_[j].emplace_back(static_cast<uint32_t>(i), len);
            }
        }
    }
}

VisibilityGraph::PathResult VisibilityGraph::shortest_path(const Point& x, const Point& y) const {
    const PolygonalDomain& d = *domain_;
    if (x == y) return {Curve({x}), 0.0};
    if (d.segment_in_closure(x, y)) return {Curve({x, y}), euclid(x, y)};

    // Nodes: polygon vertices, then x (index n), y (index n+1).
    size_t n = verts_.size();
    std::vector<std::vector<std::pair<uint32_t, double>>> extra(2);
    for (size_t i = 0; i < n; ++i) {
        if (d.segment_in_closure(x, verts_[i]))
            extra[0].emplace_back(static_cast<uint32_t>(i), euclid(x, verts_[i]));
        if (d.segment_in_closure(y, verts_[i]))
            extra[1].emplace_back(static_cast<uint32_t>(i), euclid(y, verts_[i]));
    }

    size_t total = n + 2;
    std::vector<double> dist(total, kInf);
    std::vector<int32_t> parent(total, -1);
    using QE = std::pair<double, uint32_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    uint32_t src = static_cast<uint32_t>(n), dst = static_cast<uint32_t>(n + 1);
    dist[src] = 0.0;
    pq.push({0.0, src});

    auto relax = [&](uint32_t u, uint32_t v, double w) {
        if (dist[u] + w < dist[v]) {
            dist[v] = dist[u] + w;
            parent[v] = static_cast<int32_t>(u);
            pq.push({dist[v], v});
        }
    };

    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > dist[u]) continue;
        if (u == dst) break;
        if (u == src) {
            for (auto [v, w] : extra[0]) relax(u, v, w);
        } else if (u < n) {
            for (auto [v, w] : adj_[u]) relax(u, v, w);
            // Vertex-to-target edges mirror the target adjacency list.
            for (auto [v, w] : extra[1]) {
                if (v == u) relax(u, dst, w);
            }
        }
    }

    if (dist[dst] == kInf) return {Curve(), kInf};
    std::vector<Point> path;
    for (int32_t v = static_cast<int32_t>(dst); v >= 0; v = parent[v]) {
        if (v == static_cast<int32_t>(src))
            path.push_back(x);
        else if (v == static_cast<int32_t>(dst))
            path.push_back(y);
        else
            path.push_back(verts_[static_cast<size_t>(v)]);
        if (v == static_cast<int32_t>(src)) break;
    }
    std::reverse(path.begin(), path.end());
    return {Curve(std::move(path)), dist[dst]};
}

double VisibilityGraph::distance(const Point& x, const Point& y) const {
    return shortest_path(x, y).length;
}

double intrinsic_distance(const PolygonalDomain& d, const Point& x, const Point& y) {
    if (!d.contains(x) || !d.contains(y))
        throw config_error("intrinsic_distance: endpoint outside the domain");
    VisibilityGraph vg(std::make_shared<PolygonalDomain>(d));
    return vg.distance(x, y);
}

}  // namespace domainlab
