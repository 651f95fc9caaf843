#include "domainlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "domainlab/errors.hpp"

namespace domainlab {

namespace {

// Rough narrowest-feature estimate used in the empty-grid diagnostic: twice
// the largest inscribed-disk radius found on a fine probe lattice.
double probe_feature_width(const PolygonalDomain& d) {
    Point lo = d.bbox_min(), hi = d.bbox_max();
    int n = 96;
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            Point p{lo.x + (hi.x - lo.x) * (i + 0.5) / n, lo.y + (hi.y - lo.y) * (j + 0.5) / n};
            if (d.contains(p)) best = std::max(best, d.distance_to_boundary_unchecked(p));
        }
    }
    return 2.0 * best;
}

}  // namespace

Grid Grid::discretize(std::shared_ptr<const PolygonalDomain> domain, double h) {
    if (h <= 0.0) throw config_error("discretize: spacing must be positive");
    if (h >= domain->diameter())
        throw config_error("discretize: spacing " + std::to_string(h) +
                           " exceeds the domain diameter " + std::to_string(domain->diameter()));

    Grid g;
    g.domain_ = std::move(domain);
    g.h_ = h;
    const PolygonalDomain& d = *g.domain_;
    g.origin_ = d.bbox_min();
    Point ext = d.bbox_max() - d.bbox_min();
    g.nx_ = static_cast<int>(std::ceil(ext.x / h));
    g.ny_ = static_cast<int>(std::ceil(ext.y / h));
    g.cell_index_.assign(static_cast<size_t>(g.nx_) * g.ny_, -1);

    for (int iy = 0; iy < g.ny_; ++iy) {
        for (int ix = 0; ix < g.nx_; ++ix) {
            Point c{g.origin_.x + (ix + 0.5) * h, g.origin_.y + (iy + 0.5) * h};
            if (d.contains(c)) {
                g.cell_index_[static_cast<size_t>(iy) * g.nx_ + ix] =
                    static_cast<int32_t>(g.nodes_.size());
                g.nodes_.push_back(c);
                g.cell_.emplace_back(ix, iy);
            }
        }
    }
    // Fewer than 4 nodes cannot carry any discrete structure; report it the
    // same way as a genuinely empty grid.
    if (g.nodes_.size() < 4)
        throw config_error("discretize: grid too coarse (" + std::to_string(g.nodes_.size()) +
                           " nodes) at h=" + std::to_string(h) +
                           "; narrowest detected feature width is about " +
                           std::to_string(probe_feature_width(d)));

    g.dist_.resize(g.nodes_.size());
    for (size_t i = 0; i < g.nodes_.size(); ++i)
        g.dist_[i] = d.distance_to_boundary_unchecked(g.nodes_[i]);

    static constexpr int dx8[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    static constexpr int dy8[8] = {0, 1, 1, 1, 0, -1, -1, -1};

    g.offsets_.assign(g.nodes_.size() + 1, 0);
    g.axis_.assign(g.nodes_.size(), {-1, -1, -1, -1});

    std::vector<Edge> scratch;
    scratch.reserve(8);
    for (size_t i = 0; i < g.nodes_.size(); ++i) {
        scratch.clear();
        auto [ix, iy] = g.cell_[i];
        for (int k = 0; k < 8; ++k) {
            int32_t j = g.node_at_cell(ix + dx8[k], iy + dy8[k]);
            if (j < 0) continue;
            const Point& a = g.nodes_[i];
            const Point& b = g.nodes_[j];
            double len = distance(a, b);
            bool ok = std::min(g.dist_[i], g.dist_[static_cast<size_t>(j)]) > len;
            if (!ok) ok = d.segment_inside(a, b);
            if (!ok) continue;
            Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
            scratch.push_back({static_cast<uint32_t>(j), len, d.distance_to_boundary_unchecked(mid)});
        }
        g.offsets_[i + 1] = g.offsets_[i] + scratch.size();
        g.edges_.insert(g.edges_.end(), scratch.begin(), scratch.end());
        for (const Edge& e : scratch) {
            auto [jx, jy] = g.cell_[e.to];
            if (jy == iy && jx == ix + 1) g.axis_[i][0] = static_cast<int32_t>(e.to);
            if (jy == iy && jx == ix - 1) g.axis_[i][1] = static_cast<int32_t>(e.to);
            if (jx == ix && jy == iy + 1) g.axis_[i][2] = static_cast<int32_t>(e.to);
            if (jx == ix && jy == iy - 1) g.axis_[i][3] = static_cast<int32_t>(e.to);
        }
    }

    // Flood-fill component labelling over the full adjacency.
    g.component_.assign(g.nodes_.size(), -1);
    int comp = 0;
    std::deque<uint32_t> queue;
    for (size_t s = 0; s < g.nodes_.size(); ++s) {
        if (g.component_[s] >= 0) continue;
        g.component_[s] = comp;
        queue.push_back(static_cast<uint32_t>(s));
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            for (const Edge& e : g.neighbors(u)) {
                if (g.component_[e.to] < 0) {
                    g.component_[e.to] = comp;
                    queue.push_back(e.to);
                }
            }
        }
        ++comp;
    }
    g.component_count_ = comp;
    return g;
}

std::optional<uint32_t> Grid::try_snap(const Point& p) const {
    int ix = static_cast<int>(std::floor((p.x - origin_.x) / h_));
    int iy = static_cast<int>(std::floor((p.y - origin_.y) / h_));
    double best = h_;
    int32_t best_node = -1;
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            int32_t j = node_at_cell(ix + dx, iy + dy);
            if (j < 0) continue;
            double dd = distance(p, nodes_[static_cast<size_t>(j)]);
            if (dd <= best) {
                best = dd;
                best_node = j;
            }
        }
    }
    if (best_node < 0) return std::nullopt;
    return static_cast<uint32_t>(best_node);
}

uint32_t Grid::snap(const Point& p) const {
    auto s = try_snap(p);
    if (!s)
        throw config_error("snap: no grid node within one spacing of (" + std::to_string(p.x) +
                           ", " + std::to_string(p.y) + ")");
    return *s;
}

std::vector<uint32_t> Grid::nodes_in_ball(const Point& center, double r) const {
    std::vector<uint32_t> out;
    int ix0 = static_cast<int>(std::floor((center.x - r - origin_.x) / h_)) - 1;
    int ix1 = static_cast<int>(std::floor((center.x + r - origin_.x) / h_)) + 1;
    int iy0 = static_cast<int>(std::floor((center.y - r - origin_.y) / h_)) - 1;
    int iy1 = static_cast<int>(std::floor((center.y + r - origin_.y) / h_)) + 1;
    ix0 = std::max(ix0, 0);
    iy0 = std::max(iy0, 0);
    ix1 = std::min(ix1, nx_ - 1);
    iy1 = std::min(iy1, ny_ - 1);
    for (int iy = iy0; iy <= iy1; ++iy) {
        for (int ix = ix0; ix <= ix1; ++ix) {
            int32_t j = cell_index_[static_cast<size_t>(iy) * nx_ + ix];
            if (j < 0) continue;
            if (distance(nodes_[static_cast<size_t>(j)], center) < r)
                out.push_back(static_cast<uint32_t>(j));
        }
    }
    return out;
}

std::vector<int32_t> induced_components(const Grid& g, const std::vector<char>& keep,
                                        int* n_components) {
    std::vector<int32_t> comp(g.node_count(), -1);
    int c = 0;
    std::deque<uint32_t> queue;
    for (size_t s = 0; s < g.node_count(); ++s) {
        if (!keep[s] || comp[s] >= 0) continue;
        comp[s] = c;
        queue.push_back(static_cast<uint32_t>(s));
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            for (const Grid::Edge& e : g.neighbors(u)) {
                if (keep[e.to] && comp[e.to] < 0) {
                    comp[e.to] = c;
                    queue.push_back(e.to);
                }
            }
        }
        ++c;
    }
    if (n_components) *n_components = c;
    return comp;
}

}  // namespace domainlab
