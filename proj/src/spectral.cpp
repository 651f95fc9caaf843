#include "domainlab/spectral.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

#include "domainlab/errors.hpp"
#include "domainlab/sampler.hpp"

namespace domainlab {

SubgridLaplacian::SubgridLaplacian(const Grid& g, std::span<const uint32_t> nodes) {
    n_ = nodes.size();
    w_ = 1.0 / (g.spacing() * g.spacing());
    std::unordered_map<uint32_t, uint32_t> local;
    local.reserve(n_ * 2);
    for (size_t i = 0; i < n_; ++i) local[nodes[i]] = static_cast<uint32_t>(i);

    degree_.assign(n_, 0);
    for (size_t i = 0; i < n_; ++i) {
        const auto& ax = g.axis_neighbors(nodes[i]);
        for (int k = 0; k < 4; ++k) {
            if (ax[k] < 0) continue;
            auto it = local.find(static_cast<uint32_t>(ax[k]));
            if (it == local.end()) continue;
            uint32_t j = it->second;
            if (j > i) {
                edges_.emplace_back(static_cast<uint32_t>(i), j);
                ++degree_[i];
                ++degree_[j];
            }
        }
    }

    // Connectivity over the axis-edge subgraph.
    if (n_ > 0) {
        std::vector<std::vector<uint32_t>> adj(n_);
        for (auto [a, b] : edges_) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> seen(n_, 0);
        std::deque<uint32_t> queue{0};
        seen[0] = 1;
        size_t count = 1;
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            for (uint32_t v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    queue.push_back(v);
                }
            }
        }
        connected_ = (count == n_);
    }
}

void SubgridLaplacian::apply(const std::vector<double>& x, std::vector<double>& out) const {
    out.assign(n_, 0.0);
    for (auto [a, b] : edges_) {
        double d = w_ * (x[a] - x[b]);
        out[a] += d;
        out[b] -= d;
    }
}

namespace {

void project_mean_zero(std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

double dot_vec(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

double SubgridLaplacian::smallest_nonzero_eigenvalue(double tol, int max_iter) const {
    if (n_ < 2) throw config_error("eigen solve needs at least two nodes");
    if (!connected_) return 0.0;

    // CG solve of L y = b restricted to the mean-zero subspace.
    std::vector<double> r(n_), p(n_), Ap(n_);
    auto cg_solve = [&](const std::vector<double>& b, std::vector<double>& y) {
        apply(y, Ap);
        for (size_t i = 0; i < n_; ++i) r[i] = b[i] - Ap[i];
        project_mean_zero(r);
        p = r;
        double rr = dot_vec(r, r);
        double b2 = dot_vec(b, b);
        double limit = std::max(1e-24 * b2, 1e-300);
        int cap = static_cast<int>(4 * n_) + 200;
        for (int it = 0; it < cap && rr > limit; ++it) {
            apply(p, Ap);
            double pAp = dot_vec(p, Ap);
            if (pAp <= 0.0) break;
            double alpha = rr / pAp;
            for (size_t i = 0; i < n_; ++i) {
                y[i] += alpha * p[i];
                r[i] -= alpha * Ap[i];
            }
            project_mean_zero(r);
            double rr_new = dot_vec(r, r);
            double beta = rr_new / rr;
            rr = rr_new;
            for (size_t i = 0; i < n_; ++i) p[i] = r[i] + beta * p[i];
        }
    };

    RandomStream rng(0x5eedULL);
    std::vector<double> x(n_), y(n_, 0.0);
    for (double& v : x) v = rng.unit() - 0.5;
    project_mean_zero(x);
    double xn = std::sqrt(dot_vec(x, x));
    for (double& v : x) v /= xn;

    double mu_prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < max_iter; ++it) {
        cg_solve(x, y);
        project_mean_zero(y);
        double yy = dot_vec(y, y);
        if (yy <= 0.0) throw convergence_error("inverse iteration collapsed");
        double mu = dot_vec(x, y) / yy;  // Rayleigh quotient of L at y
        double yn = std::sqrt(yy);
        for (size_t i = 0; i < n_; ++i) x[i] = y[i] / yn;
        if (std::abs(mu - mu_prev) <= tol * std::abs(mu)) return mu;
        mu_prev = mu;
    }
    throw convergence_error("inverse power iteration did not converge within cap");
}

double poincare_constant_l2(const Grid& g, const Point& x0, double r) {
    auto ball = g.nodes_in_ball(x0, r);
    if (ball.size() < 2) throw config_error("poincare_constant_l2: ball has fewer than 2 nodes");
    SubgridLaplacian lap(g, ball);
    if (!lap.connected()) return std::numeric_limits<double>::infinity();
    double mu = lap.smallest_nonzero_eigenvalue();
    if (mu <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (r * std::sqrt(mu));
}

}  // namespace domainlab
