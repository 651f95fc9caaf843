#include "domainlab/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "domainlab/errors.hpp"
#include "domainlab/parallel.hpp"

namespace domainlab {

namespace {

// Pairs grouped by a fixed number of sources so each source needs one
// Dijkstra per exponent. Target lists are per-source prefix streams, so a
// larger n_pairs strictly extends the sampled set.
struct GroupedPairs {
    std::vector<uint32_t> sources;
    std::vector<std::vector<uint32_t>> targets;
};

constexpr int kGroupSources = 16;

GroupedPairs grouped_pairs(const Grid& g, const Sampler& s) {
    GroupedPairs gp;
    RandomStream src_rng(s.seed * 0xa0761d64ULL + 3);
    double min_sep = 4.0 * g.spacing();
    int per_source = std::max(1, (s.n_pairs + kGroupSources - 1) / kGroupSources);
    for (int i = 0; i < kGroupSources; ++i) {
        uint32_t src = sample_node(g, src_rng, s.strategy);
        RandomStream tgt_rng(s.seed * 0xe7037ed1ULL + 101 * static_cast<uint64_t>(i + 1));
        std::vector<uint32_t> targets;
        int attempts = 0;
        while (static_cast<int>(targets.size()) < per_source && attempts < 64 * per_source) {
            ++attempts;
            uint32_t t = sample_node(g, tgt_rng, s.strategy);
            if (t == src) continue;
            if (distance(g.node(src), g.node(t)) < min_sep) continue;
            targets.push_back(t);
        }
        if (!targets.empty()) {
            gp.sources.push_back(src);
            gp.targets.push_back(std::move(targets));
        }
    }
    return gp;
}

// Sample points of a grid path: the path nodes (with cached boundary
// distances) plus edge midpoints (with cached midpoint distances).
void grid_path_samples(const Grid& g, const Curve& path,
                       std::vector<std::pair<Point, double>>& samples,
                       std::vector<double>& dists) {
    samples.clear();
    dists.clear();
    const auto& verts = path.vertices();
    const auto& cum = path.cumulative_length();
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i > 0) {
            Point mid{0.5 * (verts[i - 1].x + verts[i].x), 0.5 * (verts[i - 1].y + verts[i].y)};
            samples.emplace_back(mid, 0.5 * (cum[i - 1] + cum[i]));
            dists.push_back(g.domain().distance_to_boundary_unchecked(mid));
        }
        samples.emplace_back(verts[i], cum[i]);
        dists.push_back(g.domain().distance_to_boundary_unchecked(verts[i]));
    }
}

void curve_samples(const PolygonalDomain& d, const Curve& c, double step,
                   std::vector<std::pair<Point, double>>& samples, std::vector<double>& dists) {
    samples = c.sample(step);
    dists.clear();
    dists.reserve(samples.size());
    for (const auto& [p, t] : samples) dists.push_back(d.distance_to_boundary_unchecked(p));
}

}  // namespace

const char* to_string(ConditionKind k) {
    switch (k) {
        case ConditionKind::quasiconvex: return "quasiconvex";
        case ConditionKind::llc2: return "llc2";
        case ConditionKind::john: return "john";
        case ConditionKind::uniform: return "uniform";
        case ConditionKind::cigar: return "cigar";
        case ConditionKind::carrot: return "carrot";
        case ConditionKind::ahlfors: return "ahlfors";
        case ConditionKind::ahlfors_intrinsic: return "ahlfors_intrinsic";
    }
    return "?";
}

const char* to_string(Sidedness s) {
    switch (s) {
        case Sidedness::upper_bound_of_true: return "upper_bound_of_true";
        case Sidedness::lower_bound_of_true: return "lower_bound_of_true";
        case Sidedness::two_sided_within_tol: return "two_sided_within_tol";
    }
    return "?";
}

double uniform_epsilon_of_curve(const Point& x, const Point& y,
                                const std::vector<std::pair<Point, double>>& samples,
                                const std::vector<double>& sample_dists, double curve_length) {
    double sep = distance(x, y);
    if (sep <= 0.0 || curve_length <= 0.0) return 0.0;
    double eps = sep / curve_length;
    for (size_t i = 0; i < samples.size(); ++i) {
        const Point& z = samples[i].first;
        double dx = distance(x, z);
        double dy = distance(y, z);
        if (dx == 0.0 || dy == 0.0) continue;  // endpoints contribute infinity
        double cone = dx * dy / sep;
        eps = std::min(eps, sample_dists[i] / cone);
    }
    return std::min(eps, 1.0);
}

ConditionEstimate quasiconvexity_constant(const Grid& g, const VisibilityGraph& vg,
                                          const Sampler& s) {
    if (g.component_count() != 1)
        throw config_error("quasiconvexity_constant: grid is disconnected");
    auto pairs = sample_pairs(g, s);
    if (pairs.empty()) throw config_error("quasiconvexity_constant: no admissible pairs");

    std::vector<double> ratio(pairs.size(), 0.0);
    parallel_for(pairs.size(), [&](size_t k) {
        const Point& x = g.node(pairs[k].first);
        const Point& y = g.node(pairs[k].second);
        ratio[k] = vg.distance(x, y) / distance(x, y);
    });

    ConditionEstimate est;
    est.kind = ConditionKind::quasiconvex;
    est.sidedness = Sidedness::lower_bound_of_true;
    est.seed = s.seed;
    est.h = g.spacing();
    est.params = s.describe();
    size_t arg = 0;
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (ratio[k] > ratio[arg]) arg = k;
    }
    est.constant = ratio[arg];
    est.witness_points = {g.node(pairs[arg].first), g.node(pairs[arg].second)};
    return est;
}

double llc2_critical_b(const Grid& g, const Point& z, double r) {
    std::vector<uint32_t> far;
    for (size_t i = 0; i < g.node_count(); ++i) {
        if (distance(g.node(i), z) >= r) far.push_back(static_cast<uint32_t>(i));
    }
    if (far.size() < 2)
        throw config_error("llc2_critical_b: fewer than two nodes outside B(z, r)");

    for (int k = 0; k <= 10; ++k) {
        double b = std::ldexp(1.0, -k);
        double br = b * r;
        std::vector<char> keep(g.node_count(), 0);
        for (size_t i = 0; i < g.node_count(); ++i) keep[i] = distance(g.node(i), z) >= br;
        std::vector<int32_t> comp = induced_components(g, keep);
        int32_t c0 = comp[far[0]];
        bool ok = c0 >= 0;
        for (uint32_t f : far) {
            if (comp[f] != c0) {
                ok = false;
                break;
            }
        }
        if (ok) return b;
    }
    return 0.0;
}

ConditionEstimate cigar_constant(const Grid& g, double alpha, double beta, const Sampler& s) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw config_error("cigar_constant: alpha in (0,1)");
    if (!(beta > 0.0 && beta <= alpha)) throw config_error("cigar_constant: beta in (0, alpha]");

    GroupedPairs gp = grouped_pairs(g, s);
    if (gp.sources.empty()) throw config_error("cigar_constant: no admissible pairs");

    struct Partial {
        double best = -1.0;
        Point wx, wy;
    };
    std::vector<Partial> partial(gp.sources.size());
    double min_node_dist = 0.5 * g.spacing();

    parallel_for(gp.sources.size(), [&](size_t si) {
        uint32_t src = gp.sources[si];
        if (g.dist(src) < min_node_dist) return;  // excluded from weighted graphs
        ShortestPathField f = grid_distance_field(g, src, alpha);
        for (uint32_t tgt : gp.targets[si]) {
            if (g.dist(tgt) < min_node_dist) continue;
            double v = f.dist[tgt];
            double sep = distance(g.node(src), g.node(tgt));
            double ratio = v / std::pow(sep, beta);
            if (ratio > partial[si].best) {
                partial[si].best = ratio;
                partial[si].wx = g.node(src);
                partial[si].wy = g.node(tgt);
            }
        }
    });

    ConditionEstimate est;
    est.kind = ConditionKind::cigar;
    est.sidedness = Sidedness::lower_bound_of_true;
    est.alpha = alpha;
    est.beta = beta;
    est.seed = s.seed;
    est.h = g.spacing();
    est.params = s.describe() + " numerator=upper_bound_of_infimum";
    est.constant = -1.0;
    for (const Partial& p : partial) {
        if (p.best > est.constant) {
            est.constant = p.best;
            est.witness_points = {p.wx, p.wy};
        }
    }
    if (est.constant < 0.0) throw config_error("cigar_constant: all sampled pairs excluded");
    return est;
}

ConditionEstimate carrot_constant(const Grid& g, double alpha, const Point& x0, const Sampler& s) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw config_error("carrot_constant: alpha in [0,1)");
    uint32_t center = g.snap(x0);
    ShortestPathField f = grid_distance_field(g, center, alpha);
    auto xs = sample_centers(g, s);
    double diam = g.domain().diameter();
    double min_node_dist = (alpha < 1.0) ? 0.5 * g.spacing() : 0.0;

    ConditionEstimate est;
    est.kind = ConditionKind::carrot;
    est.sidedness = Sidedness::lower_bound_of_true;
    est.alpha = alpha;
    est.seed = s.seed;
    est.h = g.spacing();
    est.params = s.describe() + " C1=diam";
    est.constant = 0.0;
    for (uint32_t x : xs) {
        if (x == center) continue;
        if (g.dist(x) < min_node_dist) continue;
        double v = f.dist[x];
        double score;
        if (alpha > 0.0) {
            score = v;
        } else {
            score = v / (1.0 + std::log(diam / g.dist(x)));
        }
        if (score > est.constant) {
            est.constant = score;
            est.witness_points = {g.node(x)};
            est.witness_values = {v, g.dist(x)};
        }
    }
    return est;
}

ConditionEstimate uniformity_estimate(const Grid& g, const VisibilityGraph& vg, const Sampler& s) {
    if (g.component_count() != 1) throw config_error("uniformity_estimate: grid is disconnected");
    GroupedPairs gp = grouped_pairs(g, s);
    if (gp.sources.empty()) throw config_error("uniformity_estimate: no admissible pairs");

    struct Partial {
        double worst = 2.0;
        Point wx, wy;
    };
    std::vector<Partial> partial(gp.sources.size());
    double step = 0.5 * g.spacing();

    parallel_for(gp.sources.size(), [&](size_t si) {
        uint32_t src = gp.sources[si];
        std::vector<ShortestPathField> fields;
        fields.reserve(5);
        for (double a : kCandidateAlphas) fields.push_back(grid_distance_field(g, src, a));

        std::vector<std::pair<Point, double>> samples;
        std::vector<double> dists;
        for (uint32_t tgt : gp.targets[si]) {
            const Point& x = g.node(src);
            const Point& y = g.node(tgt);
            double best_eps = 0.0;
            // Exact Euclidean geodesic candidate.
            auto vp = vg.shortest_path(x, y);
            if (vp.length < kInfinity) {
                curve_samples(g.domain(), vp.curve, step, samples, dists);
                best_eps = uniform_epsilon_of_curve(x, y, samples, dists, vp.length);
            }
            for (const auto& f : fields) {
                if (f.dist[tgt] == kInfinity) continue;
                Curve path = path_from_field(g, f, tgt);
                grid_path_samples(g, path, samples, dists);
                best_eps =
                    std::max(best_eps, uniform_epsilon_of_curve(x, y, samples, dists, path.length()));
            }
            if (best_eps < partial[si].worst) {
                partial[si].worst = best_eps;
                partial[si].wx = x;
                partial[si].wy = y;
            }
        }
    });

    ConditionEstimate est;
    est.kind = ConditionKind::uniform;
    est.sidedness = Sidedness::lower_bound_of_true;
    est.seed = s.seed;
    est.h = g.spacing();
    est.params = s.describe() + " candidates=vgraph+alphas";
    est.constant = 2.0;
    for (const Partial& p : partial) {
        if (p.worst < est.constant) {
            est.constant = p.worst;
            est.witness_points = {p.wx, p.wy};
        }
    }
    if (est.constant > 1.0) est.constant = 1.0;
    return est;
}

ConditionEstimate john_estimate(const Grid& g, const VisibilityGraph& vg, const Point& x0,
                                const Sampler& s) {
    uint32_t center = g.snap(x0);
    const Point c = g.node(center);

    std::vector<ShortestPathField> fields;
    fields.reserve(5);
    for (double a : kCandidateAlphas) fields.push_back(grid_distance_field(g, center, a));

    auto xs = sample_centers(g, s);
    std::vector<double> best(xs.size(), -1.0);

    parallel_for(xs.size(), [&](size_t k) {
        uint32_t x = xs[k];
        if (x == center) {
            best[k] = 1.0;  // empty curve convention
            return;
        }
        const Point px = g.node(x);
        std::vector<std::pair<Point, double>> samples;
        std::vector<double> dists;
        double bc = -1.0;

        auto eval_curve = [&](const Curve& from_x_to_center) {
            if (from_x_to_center.size() < 2) return;
            double cmin = 1.0;
            grid_path_samples(g, from_x_to_center, samples, dists);
            for (size_t i = 0; i < samples.size(); ++i) {
                double t = samples[i].second;
                if (t <= 0.0) continue;
                cmin = std::min(cmin, dists[i] / t);
            }
            bc = std::max(bc, cmin);
        };

        auto eval_exact = [&]() {
            auto vp = vg.shortest_path(px, c);
            if (vp.length == kInfinity) return;
            auto sm = vp.curve.sample(0.5 * g.spacing());
            double cmin = 1.0;
            for (const auto& [p, t] : sm) {
                if (t <= 0.0) continue;
                cmin = std::min(cmin,
                                g.domain().distance_to_boundary_unchecked(p) / t);
            }
            bc = std::max(bc, cmin);
        };

        eval_exact();
        for (const auto& f : fields) {
            if (f.dist[x] == kInfinity) continue;
            Curve path = path_from_field(g, f, x);  // center -> x
            std::vector<Point> rev(path.vertices().rbegin(), path.vertices().rend());
            eval_curve(Curve(std::move(rev)));
        }
        best[k] = bc;
    });

    ConditionEstimate est;
    est.kind = ConditionKind::john;
    est.sidedness = Sidedness::lower_bound_of_true;
    est.seed = s.seed;
    est.h = g.spacing();
    est.params = s.describe() + " center=(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    est.constant = 1.0;
    est.witness_points = {c};
    for (size_t k = 0; k < xs.size(); ++k) {
        if (best[k] < 0.0) continue;  // disconnected sample: skip, witnessed elsewhere
        if (best[k] < est.constant) {
            est.constant = best[k];
            est.witness_points = {c, g.node(xs[k])};
        }
    }
    return est;
}

ConditionEstimate ahlfors_constant(const Grid& g, bool intrinsic, const Sampler& s) {
    double r_o = std::min(1.0, std::sqrt(g.domain().area() / (2.0 * M_PI)));
    std::vector<double> radii = s.radii;
    if (radii.empty()) radii = Sampler::dyadic_radii(g.domain().diameter(), 1, 5);
    std::erase_if(radii, [&](double r) { return r > r_o || r < 2.0 * g.spacing(); });
    if (radii.empty()) throw config_error("ahlfors_constant: empty radii ladder below r_o");

    auto centers = sample_centers(g, s);
    struct Partial {
        double worst = kInfinity;
        Point wc;
        double wr = 0.0;
    };
    std::vector<Partial> partial(centers.size());

    parallel_for(centers.size(), [&](size_t k) {
        const Point x = g.node(centers[k]);
        for (double r : radii) {
            double measure;
            if (intrinsic) {
                measure = intrinsic_ball(g, x, r).measure;
            } else {
                measure = static_cast<double>(g.nodes_in_ball(x, r).size()) * g.cell_area();
            }
            double ratio = measure / (M_PI * r * r);
            if (ratio < partial[k].worst) {
                partial[k].worst = ratio;
                partial[k].wc = x;
                partial[k].wr = r;
            }
        }
    });

    ConditionEstimate est;
    est.kind = intrinsic ? ConditionKind::ahlfors_intrinsic : ConditionKind::ahlfors;
    est.sidedness = Sidedness::upper_bound_of_true;
    est.seed = s.seed;
    est.h = g.spacing();
    est.params = s.describe() + " r_o=" + std::to_string(r_o);
    est.constant = kInfinity;
    for (const Partial& p : partial) {
        if (p.worst < est.constant) {
            est.constant = p.worst;
            est.witness_points = {p.wc};
            est.witness_values = {p.wr};
        }
    }
    return est;
}

}  // namespace domainlab
