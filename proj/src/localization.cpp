#include "domainlab/localization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "domainlab/errors.hpp"
#include "domainlab/geodesic.hpp"
#include "domainlab/parallel.hpp"

namespace domainlab {

namespace {

// Marks every node within the open ball B(c, rho) in the mask.
void mark_ball(const Grid& g, const Point& c, double rho, std::vector<char>& mask) {
    if (rho <= 0.0) return;
    double h = g.spacing();
    Point o = g.origin();
    int ix0 = std::max(0, static_cast<int>(std::floor((c.x - rho - o.x) / h)) - 1);
    int ix1 = std::min(g.nx() - 1, static_cast<int>(std::floor((c.x + rho - o.x) / h)) + 1);
    int iy0 = std::max(0, static_cast<int>(std::floor((c.y - rho - o.y) / h)) - 1);
    int iy1 = std::min(g.ny() - 1, static_cast<int>(std::floor((c.y + rho - o.y) / h)) + 1);
    double rho2 = rho * rho;
    for (int iy = iy0; iy <= iy1; ++iy) {
        for (int ix = ix0; ix <= ix1; ++ix) {
            int32_t n = g.node_at_cell(ix, iy);
            if (n < 0 || mask[static_cast<size_t>(n)]) continue;
            Point p = g.node(static_cast<size_t>(n));
            double dx = p.x - c.x, dy = p.y - c.y;
            if (dx * dx + dy * dy < rho2) mask[static_cast<size_t>(n)] = 1;
        }
    }
}

struct CandidatePick {
    Curve curve;     // from the pair's first point to the second
    double eps = -1.0;
    int alpha_index = -1;  // -1 = exact Euclidean geodesic
};

// Best candidate among the visibility geodesic and the grid geodesics
// already computed in `fields` (all rooted at `src`). Curves run src -> tgt.
CandidatePick best_candidate(const Grid& g, const VisibilityGraph* vg, uint32_t src, uint32_t tgt,
                             const std::vector<ShortestPathField>& fields) {
    const Point x = g.node(src);
    const Point y = g.node(tgt);
    CandidatePick pick;
    std::vector<std::pair<Point, double>> samples;
    std::vector<double> dists;

    auto consider = [&](Curve c, double len, int idx) {
        if (c.size() < 1 || len == kInfinity) return;
        samples = c.sample(0.5 * g.spacing());
        dists.clear();
        dists.reserve(samples.size());
        for (const auto& [p, t] : samples)
            dists.push_back(g.domain().distance_to_boundary_unchecked(p));
        double eps = uniform_epsilon_of_curve(x, y, samples, dists, len);
        if (eps > pick.eps) {
            pick.eps = eps;
            pick.curve = std::move(c);
            pick.alpha_index = idx;
        }
    };

    if (vg) {
        auto vp = vg->shortest_path(x, y);
        if (vp.length < kInfinity) consider(std::move(vp.curve), vp.length, -1);
    }
    for (size_t i = 0; i < fields.size(); ++i) {
        if (fields[i].dist[tgt] == kInfinity) continue;
        Curve path = path_from_field(g, fields[i], tgt);
        double len = path.length();
        consider(std::move(path), len, static_cast<int>(i));
    }
    return pick;
}

}  // namespace

std::vector<double> region_boundary_distance(const Grid& g, const std::vector<char>& region) {
    // Exposed cell edges: sides of region cells whose neighbor cell is not in
    // the region (missing node or masked out).
    std::vector<Segment> exposed;
    double h = g.spacing();
    Point o = g.origin();
    static constexpr int dx4[4] = {1, -1, 0, 0};
    static constexpr int dy4[4] = {0, 0, 1, -1};
    for (size_t i = 0; i < g.node_count(); ++i) {
        if (!region[i]) continue;
        int ix = g.cell_x(i), iy = g.cell_y(i);
        for (int k = 0; k < 4; ++k) {
            int32_t nb = g.node_at_cell(ix + dx4[k], iy + dy4[k]);
            if (nb >= 0 && region[static_cast<size_t>(nb)]) continue;
            double x0 = o.x + ix * h, y0 = o.y + iy * h;
            Segment s;
            switch (k) {
                case 0: s = {{x0 + h, y0}, {x0 + h, y0 + h}}; break;
                case 1: s = {{x0, y0}, {x0, y0 + h}}; break;
                case 2: s = {{x0, y0 + h}, {x0 + h, y0 + h}}; break;
                default: s = {{x0, y0}, {x0 + h, y0}}; break;
            }
            exposed.push_back(s);
        }
    }

    std::vector<double> out(g.node_count(), kInfinity);
    std::vector<uint32_t> region_nodes;
    for (size_t i = 0; i < g.node_count(); ++i)
        if (region[i]) region_nodes.push_back(static_cast<uint32_t>(i));

    parallel_for(region_nodes.size(), [&](size_t k) {
        uint32_t i = region_nodes[k];
        double best = g.dist(i);
        const Point p = g.node(i);
        for (const Segment& s : exposed) {
            // Cheap reject box before the exact distance.
            double bx = std::max({s.a.x, s.b.x});
            double sx = std::min({s.a.x, s.b.x});
            double by = std::max({s.a.y, s.b.y});
            double sy = std::min({s.a.y, s.b.y});
            double dx = std::max({sx - p.x, 0.0, p.x - bx});
            double dy = std::max({sy - p.y, 0.0, p.y - by});
            if (dx * dx + dy * dy >= best * best) continue;
            best = std::min(best, point_segment_distance(p, s.a, s.b));
        }
        out[i] = best;
    });
    return out;
}

LocalizationResult localize(const Grid& g, const VisibilityGraph& vg, const Point& x0, double r,
                            double eps0) {
    if (!(eps0 > 0.0 && eps0 <= 1.0)) throw config_error("localize: eps0 must lie in (0, 1]");
    if (!(r > 0.0 && r < g.domain().diameter())) throw config_error("localize: r out of range");

    LocalizationResult res;
    uint32_t X0 = g.snap(x0);
    const Point px0 = g.node(X0);
    res.x0 = px0;
    res.r = r;
    res.eps0 = eps0;
    res.c0 = eps0 * eps0 * eps0 / (6.0 * (eps0 + 2.0));

    double far_radius = 4.0 * r / eps0;
    double max_dist = 0.0;
    uint32_t y0 = X0;
    double best_sphere_gap = kInfinity;
    for (size_t i = 0; i < g.node_count(); ++i) {
        double d = distance(g.node(i), px0);
        max_dist = std::max(max_dist, d);
        double gap = std::abs(d - far_radius);
        if (gap < best_sphere_gap) {
            best_sphere_gap = gap;
            y0 = static_cast<uint32_t>(i);
        }
    }

    if (max_dist < far_radius) {
        // Whole domain already sits inside B(x0, 4r/eps0).
        res.whole_domain = true;
        res.lambda = 4.0 / eps0;
        res.region.assign(g.node_count(), 1);
        res.z0 = px0;
        res.z0_node = X0;
        return res;
    }

    res.lambda = 1.0 + (eps0 + 4.0) * (eps0 + 4.0) / (4.0 * eps0 * eps0);

    // gamma_0 from x0 to y0, best of the candidate family.
    std::vector<ShortestPathField> fields0;
    for (double a : kCandidateAlphas) fields0.push_back(grid_distance_field(g, X0, a));
    CandidatePick g0 = best_candidate(g, &vg, X0, y0, fields0);
    if (g0.eps <= 0.0)
        throw config_error("localize: no candidate curve joins x0 to the far node y0");

    // z0: curve point nearest the sphere |x0 - z| = 2r/eps0, snapped.
    double want = 2.0 * r / eps0;
    auto g0_samples = g0.curve.sample(0.5 * g.spacing());
    Point z0_pt = g0_samples.front().first;
    double best_gap = kInfinity;
    for (const auto& [p, t] : g0_samples) {
        double gap = std::abs(distance(p, px0) - want);
        if (gap < best_gap) {
            best_gap = gap;
            z0_pt = p;
        }
    }
    res.z0_node = g.snap(z0_pt);
    res.z0 = g.node(res.z0_node);

    // Carrot sets G_x for every node of B(x0, r) outside B(z0, r).
    std::vector<uint32_t> targets;
    for (uint32_t i : g.nodes_in_ball(px0, r)) {
        if (distance(g.node(i), res.z0) >= r) targets.push_back(i);
    }

    std::vector<ShortestPathField> fields_z;
    for (double a : kCandidateAlphas) fields_z.push_back(grid_distance_field(g, res.z0_node, a));

    int workers = worker_count();
    size_t chunk = (targets.size() + workers - 1) / std::max(1, workers);
    std::vector<std::vector<char>> masks(
        static_cast<size_t>(workers), std::vector<char>(g.node_count(), 0));
    std::vector<std::vector<Point>> deficits(static_cast<size_t>(workers));
    std::vector<std::map<int, int>> alpha_wins(static_cast<size_t>(workers));
    std::vector<Point> unreachable;
    std::mutex unreachable_mu;

    parallel_for(static_cast<size_t>(workers), [&](size_t w) {
        size_t lo = w * chunk;
        size_t hi = std::min(targets.size(), lo + chunk);
        std::vector<char>& mask = masks[w];
        for (size_t k = lo; k < hi; ++k) {
            uint32_t x = targets[k];
            CandidatePick pick = best_candidate(g, nullptr, res.z0_node, x, fields_z);
            if (pick.eps <= 0.0) {
                std::lock_guard<std::mutex> lock(unreachable_mu);
                unreachable.push_back(g.node(x));
                continue;
            }
            if (pick.eps < eps0) deficits[w].push_back(g.node(x));
            alpha_wins[w][pick.alpha_index]++;

            const Point px = g.node(x);
            double sep = distance(px, res.z0);
            auto samples = pick.curve.sample(0.5 * g.spacing());
            for (const auto& [v, t] : samples) {
                mask[g.snap(v)] = 1;  // the path itself belongs to the carrot set
                double rho = eps0 * distance(px, v) * distance(res.z0, v) / sep;
                mark_ball(g, v, rho, mask);
            }
        }
    });

    if (!unreachable.empty()) {
        const Point& p = unreachable.front();
        throw config_error("localize: no candidate curve joins z0=(" + std::to_string(res.z0.x) +
                           "," + std::to_string(res.z0.y) + ") to (" + std::to_string(p.x) + "," +
                           std::to_string(p.y) + ")");
    }

    res.region.assign(g.node_count(), 0);
    for (const auto& mask : masks) {
        for (size_t i = 0; i < mask.size(); ++i) res.region[i] |= mask[i];
    }
    mark_ball(g, res.z0, r, res.region);

    std::map<int, int> wins;
    for (const auto& aw : alpha_wins) {
        for (auto [k, v] : aw) wins[k] += v;
    }
    for (auto [k, v] : wins) {
        if (!res.winning_alphas.empty()) res.winning_alphas += " ";
        res.winning_alphas +=
            (k < 0 ? std::string("exact") : std::to_string(kCandidateAlphas[k])) + ":" +
            std::to_string(v);
    }
    for (const auto& dv : deficits)
        res.eps_deficit_points.insert(res.eps_deficit_points.end(), dv.begin(), dv.end());
    return res;
}

LocalizationResult verify_localization(const Grid& g, LocalizationResult res, const Point& x0,
                                       double r, const Sampler& s) {
    const Point px0 = g.node(g.snap(x0));

    // Sandwich: B(x0, r) cap Omega inside the region, region inside
    // B(x0, lambda r).
    res.sandwich_ok = true;
    for (uint32_t i : g.nodes_in_ball(px0, r)) {
        if (!res.region[i]) {
            res.sandwich_ok = false;
            res.witnesses.push_back(g.node(i));
            if (res.witnesses.size() > 8) break;
        }
    }
    double lam_r = res.lambda * r;
    for (size_t i = 0; i < g.node_count(); ++i) {
        if (res.region[i] && distance(g.node(i), px0) > lam_r) {
            res.sandwich_ok = false;
            res.witnesses.push_back(g.node(i));
            if (res.witnesses.size() > 16) break;
        }
    }

    // John property of the region subgrid with center z0, region-relative
    // boundary distances, same candidate exponents.
    std::vector<double> rdist = region_boundary_distance(g, res.region);
    uint32_t z0 = res.z0_node;
    if (!res.region[z0]) {
        res.john_ok = false;
        res.witnesses.push_back(res.z0);
        return res;
    }

    auto dijkstra_region = [&](double alpha) {
        ShortestPathField f;
        f.dist.assign(g.node_count(), kInfinity);
        f.parent.assign(g.node_count(), -1);
        double min_dist = (alpha < 1.0) ? 0.25 * g.spacing() : 0.0;
        auto ok = [&](uint32_t v) { return res.region[v] && rdist[v] >= min_dist; };
        if (!ok(z0)) return f;
        using QE = std::pair<double, uint32_t>;
        std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
        f.dist[z0] = 0.0;
        pq.push({0.0, z0});
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > f.dist[u]) continue;
            for (const Grid::Edge& e : g.neighbors(u)) {
                if (!ok(e.to)) continue;
                double mid = std::min(e.mid_dist, 0.5 * (rdist[u] + rdist[e.to]));
                mid = std::max(mid, 0.125 * g.spacing());
                double w = (alpha == 1.0) ? e.length : e.length * std::pow(mid, alpha - 1.0);
                double nd = du + w;
                if (nd < f.dist[e.to]) {
                    f.dist[e.to] = nd;
                    f.parent[e.to] = static_cast<int32_t>(u);
                    pq.push({nd, e.to});
                }
            }
        }
        return f;
    };

    std::vector<ShortestPathField> fields;
    for (double a : kCandidateAlphas) fields.push_back(dijkstra_region(a));

    std::vector<uint32_t> region_nodes;
    for (size_t i = 0; i < g.node_count(); ++i)
        if (res.region[i]) region_nodes.push_back(static_cast<uint32_t>(i));

    RandomStream rng(s.seed * 0xb5297a4dULL + 17);
    int n_samples = std::min<int>(s.n_centers * 4, static_cast<int>(region_nodes.size()));
    std::vector<uint32_t> samples;
    for (int k = 0; k < n_samples; ++k)
        samples.push_back(region_nodes[rng.below(region_nodes.size())]);

    double chat = 1.0;
    Point worst = res.z0;
    std::vector<double> per_sample(samples.size(), -1.0);
    parallel_for(samples.size(), [&](size_t k) {
        uint32_t x = samples[k];
        if (x == z0) {
            per_sample[k] = 1.0;
            return;
        }
        double best = -1.0;
        for (const auto& f : fields) {
            if (f.dist[x] == kInfinity) continue;
            Curve path = path_from_field(g, f, x);  // z0 -> x
            const auto& verts = path.vertices();
            const auto& cum = path.cumulative_length();
            double total = path.length();
            double cmin = 1.0;
            for (size_t i = 0; i + 1 < verts.size(); ++i) {
                // Arclength measured from x, so walk the path backwards.
                double t = total - cum[i];
                uint32_t node = g.snap(verts[i]);
                if (t > 0.0) cmin = std::min(cmin, rdist[node] / t);
            }
            best = std::max(best, cmin);
        }
        per_sample[k] = best;
    });
    for (size_t k = 0; k < samples.size(); ++k) {
        if (per_sample[k] < 0.0) {
            chat = 0.0;  // unreachable sample inside the region
            worst = g.node(samples[k]);
            break;
        }
        if (per_sample[k] < chat) {
            chat = per_sample[k];
            worst = g.node(samples[k]);
        }
    }

    res.john_constant = chat;
    res.john_ok = chat >= res.c0 * (1.0 - kJohnVerifyTolerance);
    if (!res.john_ok) res.witnesses.push_back(worst);
    return res;
}

}  // namespace domainlab
