#include "domainlab/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "domainlab/discrete_function.hpp"
#include "domainlab/errors.hpp"

namespace domainlab {

namespace {

void validate_problem(const Grid& g, const CapacityProblem& prob) {
    if (prob.U.empty() || prob.V.empty()) throw config_error("capacity: U and V must be nonempty");
    if (!(prob.p > 1.0) || !std::isfinite(prob.p))
        throw config_error("capacity: p must lie in (1, inf)");
    std::unordered_set<uint32_t> uset(prob.U.begin(), prob.U.end());
    for (uint32_t v : prob.V) {
        if (uset.count(v)) throw config_error("capacity: U and V overlap");
    }
    double min_sep = std::numeric_limits<double>::infinity();
    for (uint32_t a : prob.U) {
        for (uint32_t b : prob.V) {
            min_sep = std::min(min_sep, distance(g.node(a), g.node(b)));
        }
    }
    if (min_sep < 2.0 * g.spacing())
        throw config_error("capacity: U-V separation below two spacings");
}

// Axis edges (a < b) of the full grid.
std::vector<std::pair<uint32_t, uint32_t>> axis_edges(const Grid& g) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t i = 0; i < g.node_count(); ++i) {
        const auto& ax = g.axis_neighbors(i);
        for (int k = 0; k < 4; ++k) {
            if (ax[k] >= 0 && static_cast<size_t>(ax[k]) > i)
                edges.emplace_back(static_cast<uint32_t>(i), static_cast<uint32_t>(ax[k]));
        }
    }
    return edges;
}

CapacityResult solve_p2(const Grid& g, const CapacityProblem& prob) {
    size_t n = g.node_count();
    auto edges = axis_edges(g);

    std::vector<double> fixed(n, std::numeric_limits<double>::quiet_NaN());
    for (uint32_t u : prob.U) fixed[u] = 1.0;
    for (uint32_t v : prob.V) fixed[v] = 0.0;

    std::vector<int32_t> local(n, -1);
    std::vector<uint32_t> free_nodes;
    for (size_t i = 0; i < n; ++i) {
        if (std::isnan(fixed[i])) {
            local[i] = static_cast<int32_t>(free_nodes.size());
            free_nodes.push_back(static_cast<uint32_t>(i));
        }
    }
    size_t m = free_nodes.size();

    // Reduced system L_ff x = b from the edge quadratic sum (u_a - u_b)^2.
    std::vector<double> b(m, 0.0);
    std::vector<std::pair<uint32_t, uint32_t>> ff_edges;
    std::vector<int> diag(m, 0);
    for (auto [a, c] : edges) {
        bool fa = !std::isnan(fixed[a]);
        bool fc = !std::isnan(fixed[c]);
        if (!fa && !fc) {
            ff_edges.emplace_back(static_cast<uint32_t>(local[a]), static_cast<uint32_t>(local[c]));
            ++diag[static_cast<size_t>(local[a])];
            ++diag[static_cast<size_t>(local[c])];
        } else if (!fa && fc) {
            ++diag[static_cast<size_t>(local[a])];
            b[static_cast<size_t>(local[a])] += fixed[c];
        } else if (fa && !fc) {
            ++diag[static_cast<size_t>(local[c])];
            b[static_cast<size_t>(local[c])] += fixed[a];
        }
    }

    auto matvec = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (size_t i = 0; i < m; ++i) out[i] = diag[i] * x[i];
        for (auto [i, j] : ff_edges) {
            out[i] -= x[j];
            out[j] -= x[i];
        }
    };

    std::vector<double> x(m, 0.5), r(m), p(m), Ap(m);
    if (m > 0) {
        matvec(x, Ap);
        for (size_t i = 0; i < m; ++i) r[i] = b[i] - Ap[i];
        p = r;
        double rr = 0.0, bb = 0.0;
        for (size_t i = 0; i < m; ++i) {
            rr += r[i] * r[i];
            bb += b[i] * b[i];
        }
        double limit = std::max(1e-24 * std::max(bb, 1.0), 1e-300);
        int cap = static_cast<int>(6 * m) + 500;
        int it = 0;
        for (; it < cap && rr > limit; ++it) {
            matvec(p, Ap);
            double pAp = 0.0;
            for (size_t i = 0; i < m; ++i) pAp += p[i] * Ap[i];
            if (pAp <= 0.0) break;
            double alpha = rr / pAp;
            double rr_new = 0.0;
            for (size_t i = 0; i < m; ++i) {
                x[i] += alpha * p[i];
                r[i] -= alpha * Ap[i];
                rr_new += r[i] * r[i];
            }
            double beta = rr_new / rr;
            rr = rr_new;
            for (size_t i = 0; i < m; ++i) p[i] = r[i] + beta * p[i];
        }
        if (rr > limit && it >= cap)
            throw convergence_error("capacity p=2: CG stalled, residual " + std::to_string(rr));
    }

    CapacityResult res;
    res.potential.assign(n, 0.0);
    for (size_t i = 0; i < n; ++i)
        res.potential[i] = std::isnan(fixed[i]) ? std::clamp(x[static_cast<size_t>(local[i])], 0.0, 1.0)
                                                : fixed[i];
    double energy = 0.0;
    for (auto [a, c] : edges) {
        double d = res.potential[a] - res.potential[c];
        energy += d * d;
    }
    res.value = energy;
    return res;
}

CapacityResult solve_pgd(const Grid& g, const CapacityProblem& prob) {
    size_t n = g.node_count();
    double cell = g.cell_area();
    double h = g.spacing();
    double p = prob.p;
    constexpr double kEps2 = 1e-24;  // gradient smoothing for p < 2

    std::vector<char> pinned(n, 0);
    std::vector<double> u(n, 0.5);
    for (uint32_t i : prob.U) {
        u[i] = 1.0;
        pinned[i] = 1;
    }
    for (uint32_t i : prob.V) {
        u[i] = 0.0;
        pinned[i] = 1;
    }

    DiscreteFunction f(g, 0.0);
    auto energy_of = [&](const std::vector<double>& w) {
        double acc = 0.0;
        for (size_t i = 0; i < n; ++i) {
            f.values[i] = w[i];
        }
        for (size_t i = 0; i < n; ++i) {
            Point grad = discrete_gradient(f, i);
            double m2 = grad.x * grad.x + grad.y * grad.y;
            acc += std::pow(m2 + kEps2, 0.5 * p) * cell;
        }
        return acc;
    };

    auto gradient_of = [&](const std::vector<double>& w, std::vector<double>& out) {
        for (size_t i = 0; i < n; ++i) f.values[i] = w[i];
        std::fill(out.begin(), out.end(), 0.0);
        for (size_t i = 0; i < n; ++i) {
            const auto& ax = g.axis_neighbors(i);
            Point grad = discrete_gradient(f, i);
            double m2 = grad.x * grad.x + grad.y * grad.y;
            double coef = p * std::pow(m2 + kEps2, 0.5 * p - 1.0) * cell;
            // x-direction difference actually used by discrete_gradient
            if (ax[0] >= 0) {
                out[static_cast<size_t>(ax[0])] += coef * grad.x / h;
                out[i] -= coef * grad.x / h;
            } else if (ax[1] >= 0) {
                out[i] += coef * grad.x / h;
                out[static_cast<size_t>(ax[1])] -= coef * grad.x / h;
            }
            if (ax[2] >= 0) {
                out[static_cast<size_t>(ax[2])] += coef * grad.y / h;
                out[i] -= coef * grad.y / h;
            } else if (ax[3] >= 0) {
                out[i] += coef * grad.y / h;
                out[static_cast<size_t>(ax[3])] -= coef * grad.y / h;
            }
        }
    };

    std::vector<double> grad(n), trial(n);
    double e = energy_of(u);
    double step = h * h;
    const int budget = 20000;
    int it = 0;
    for (; it < budget; ++it) {
        gradient_of(u, grad);
        for (uint32_t i : prob.U) grad[i] = 0.0;
        for (uint32_t i : prob.V) grad[i] = 0.0;

        double gnorm2 = 0.0;
        for (size_t i = 0; i < n; ++i) gnorm2 += grad[i] * grad[i];
        if (gnorm2 == 0.0) break;

        bool accepted = false;
        for (int bt = 0; bt < 40; ++bt) {
            for (size_t i = 0; i < n; ++i)
                trial[i] = pinned[i] ? u[i] : std::clamp(u[i] - step * grad[i], 0.0, 1.0);
            double et = energy_of(trial);
            if (et < e) {
                double rel = (e - et) / std::max(e, 1e-300);
                u.swap(trial);
                e = et;
                step *= 1.3;
                accepted = true;
                if (rel < 1e-6) it = budget + 1;  // converged
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no descent direction at any step size
        if (it > budget) break;
    }
    if (it == budget)
        throw convergence_error("capacity p!=2: projected gradient hit the iteration budget");

    CapacityResult res;
    res.potential = std::move(u);
    // Report the unsmoothed p-energy of the minimizer.
    for (size_t i = 0; i < n; ++i) f.values[i] = res.potential[i];
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        Point gr = discrete_gradient(f, i);
        double m = std::hypot(gr.x, gr.y);
        if (m > 0.0) acc += std::pow(m, p) * cell;
    }
    res.value = acc;
    return res;
}

}  // namespace

CapacityResult capacity(const Grid& g, const CapacityProblem& prob) {
    validate_problem(g, prob);
    if (prob.p == 2.0) return solve_p2(g, prob);
    return solve_pgd(g, prob);
}

}  // namespace domainlab
