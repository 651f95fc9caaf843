#ifndef DOMAINLAB_GRID_HPP
#define DOMAINLAB_GRID_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "domainlab/domain.hpp"

namespace domainlab {

// Axis-aligned discretization of a domain. Nodes are cell centers strictly
// inside the domain; adjacency is the 8-neighborhood filtered so every edge
// segment stays inside the open domain. Immutable after construction.
class Grid {
  public:
    struct Edge {
        uint32_t to;
        double length;
        double mid_dist;  // boundary distance at edge midpoint
    };

    static Grid discretize(std::shared_ptr<const PolygonalDomain> domain, double h);

    const PolygonalDomain& domain() const { return *domain_; }
    std::shared_ptr<const PolygonalDomain> domain_ptr() const { return domain_; }

    double spacing() const { return h_; }
    Point origin() const { return origin_; }
    double cell_area() const { return h_ * h_; }

    size_t node_count() const { return nodes_.size(); }
    const Point& node(size_t i) const { return nodes_[i]; }
    const std::vector<Point>& nodes() const { return nodes_; }
    double dist(size_t i) const { return dist_[i]; }
    const std::vector<double>& dist_field() const { return dist_; }

    std::span<const Edge> neighbors(size_t i) const {
        return {edges_.data() + offsets_[i], edges_.data() + offsets_[i + 1]};
    }
    size_t edge_count() const { return edges_.size(); }

    // In-domain axis neighbors {+x, -x, +y, -y}; -1 when the edge is absent.
    const std::array<int32_t, 4>& axis_neighbors(size_t i) const { return axis_[i]; }

    int cell_x(size_t i) const { return cell_[i].first; }
    int cell_y(size_t i) const { return cell_[i].second; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int32_t node_at_cell(int ix, int iy) const {
        if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_) return -1;
        return cell_index_[static_cast<size_t>(iy) * nx_ + ix];
    }

    // Nearest node within distance h of p; throws config_error if none.
    uint32_t snap(const Point& p) const;
    std::optional<uint32_t> try_snap(const Point& p) const;

    // Node indices within the Euclidean open ball B(center, r).
    std::vector<uint32_t> nodes_in_ball(const Point& center, double r) const;

    // Component id per node over the full adjacency (0-based).
    const std::vector<int32_t>& components() const { return component_; }
    int component_count() const { return component_count_; }

  private:
    Grid() = default;

    std::shared_ptr<const PolygonalDomain> domain_;
    double h_ = 0.0;
    Point origin_;
    int nx_ = 0, ny_ = 0;
    std::vector<int32_t> cell_index_;
    std::vector<Point> nodes_;
    std::vector<std::pair<int, int>> cell_;
    std::vector<double> dist_;
    std::vector<size_t> offsets_;
    std::vector<Edge> edges_;
    std::vector<std::array<int32_t, 4>> axis_;
    std::vector<int32_t> component_;
    int component_count_ = 0;
};

// Connected components of the subgraph induced by `keep` (size = node count).
// Returns per-node component id, -1 for dropped nodes.
std::vector<int32_t> induced_components(const Grid& g, const std::vector<char>& keep,
                                        int* n_components = nullptr);

}  // namespace domainlab

#endif
