#include "domainlab/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "domainlab/errors.hpp"
#include "domainlab/geodesic.hpp"
#include "domainlab/parallel.hpp"
#include "domainlab/spectral.hpp"

namespace domainlab {

double CertificateTable::max_lower_bound() const {
    double best = -kInfinity;
    for (const Certificate& c : rows) {
        if (c.side == "lower_bound" && std::isfinite(c.constant)) best = std::max(best, c.constant);
    }
    return best;
}

double CertificateTable::min_upper_estimate() const {
    double best = kInfinity;
    for (const Certificate& c : rows) {
        if (c.side == "upper_estimate" && std::isfinite(c.constant))
            best = std::min(best, c.constant);
    }
    return best;
}

double halving_radius_fraction(const Grid& g, const Point& x, double r, double target_ratio,
                               double* achieved_ratio) {
    double full = intrinsic_ball(g, x, r).measure;
    if (full <= 0.0) throw config_error("halving_radius_fraction: empty intrinsic ball");
    double lo = 0.0, hi = 1.0;
    double best_b = 0.5, best_ratio = kInfinity;
    for (int it = 0; it < 24; ++it) {
        double mid = 0.5 * (lo + hi);
        double ratio = intrinsic_ball(g, x, mid * r).measure / full;
        if (std::abs(ratio - target_ratio) < std::abs(best_ratio - target_ratio)) {
            best_ratio = ratio;
            best_b = mid;
        }
        if (ratio < target_ratio)
            lo = mid;
        else
            hi = mid;
    }
    if (achieved_ratio) *achieved_ratio = best_ratio;
    return best_b;
}

double separating_b(const Grid& g, const Point& x0, double r) {
    // Ascending scan returns the smallest separating rung, which carries the
    // largest log(1/2b) and hence the strongest certificate.
    static constexpr double ladder[] = {1.0 / 128, 1.0 / 96, 1.0 / 64, 1.0 / 48,
                                        1.0 / 32,  1.0 / 24, 1.0 / 20};
    std::vector<uint32_t> annulus;
    for (size_t i = 0; i < g.node_count(); ++i) {
        double d = distance(g.node(i), x0);
        if (d >= 0.5 * r && d < r) annulus.push_back(static_cast<uint32_t>(i));
    }
    if (annulus.size() < 2) return 0.0;
    for (double b : ladder) {
        double br = b * r;
        std::vector<char> keep(g.node_count(), 0);
        for (size_t i = 0; i < g.node_count(); ++i) keep[i] = distance(g.node(i), x0) >= br;
        std::vector<int32_t> comp = induced_components(g, keep);
        int32_t first = comp[annulus[0]];
        for (uint32_t n : annulus) {
            if (comp[n] != first) return b;
        }
    }
    return 0.0;
}

namespace {

Point farthest_node(const Grid& g, const Point& x0) {
    size_t arg = 0;
    double best = -1.0;
    for (size_t i = 0; i < g.node_count(); ++i) {
        double d = distance(g.node(i), x0);
        if (d > best) {
            best = d;
            arg = i;
        }
    }
    return g.node(arg);
}

}  // namespace

CertificateTable sp_sweep(const Grid& g, double p, const std::vector<Point>& centers,
                          const std::vector<double>& radii, double lambda, uint64_t seed) {
    if (centers.empty() || radii.empty()) throw config_error("sp_sweep: empty centers or radii");

    struct Cell {
        Point x0;
        double r;
    };
    std::vector<Cell> cells;
    for (const Point& c : centers) {
        for (double r : radii) cells.push_back({c, r});
    }

    std::vector<std::vector<Certificate>> per_cell(cells.size());
    std::string domain_name = g.domain().name();

    parallel_for(cells.size(), [&](size_t ci) {
        const Cell& cell = cells[ci];
        auto& rows = per_cell[ci];
        auto add = [&](const std::string& side, double constant, const std::string& id,
                       const std::string& note) {
            rows.push_back({domain_name, p, lambda, cell.x0, cell.r, side, constant, id,
                            g.spacing(), seed, note});
        };

        Point seed_point = farthest_node(g, cell.x0);

        double b_sep = separating_b(g, cell.x0, cell.r);
        double b1 = (b_sep > 0.0) ? b_sep : 1.0 / 32.0;
        for (double b : {b1, 0.5 * b1}) {
            std::string id = "log_ring_b=" + std::to_string(b);
            try {
                DiscreteFunction u = log_test_function(g, cell.x0, cell.r, b, seed_point);
                double q = local_sp_functional(u, p, cell.x0, cell.r, lambda, seed);
                add("lower_bound", q, id, b_sep > 0.0 ? "separating" : "non_separating");
            } catch (const config_error& e) {
                add("lower_bound", std::nan(""), id, e.what());
            }
        }

        try {
            double achieved = 0.0;
            double bh = halving_radius_fraction(g, cell.x0, cell.r, 0.5, &achieved);
            DiscreteFunction u = annulus_test_function(g, cell.x0, cell.r, 1.0, bh);
            double q = local_sp_functional(u, p, cell.x0, cell.r, lambda, seed);
            add("lower_bound", q, "annulus_ramp_b=" + std::to_string(bh),
                "measure_ratio=" + std::to_string(achieved));
        } catch (const config_error& e) {
            add("lower_bound", std::nan(""), "annulus_ramp", e.what());
        }

        if (p == 2.0) {
            try {
                double c = poincare_constant_l2(g, cell.x0, cell.r);
                add("upper_estimate", c, "eigen_l2", "lambda=1");
            } catch (const std::runtime_error& e) {
                add("upper_estimate", std::nan(""), "eigen_l2", e.what());
            }
        }
    });

    CertificateTable table;
    for (auto& rows : per_cell) {
        table.rows.insert(table.rows.end(), rows.begin(), rows.end());
    }
    return table;
}

}  // namespace domainlab
