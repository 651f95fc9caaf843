#include "domainlab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "domainlab/errors.hpp"

namespace domainlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<double, double> value_range(const DiscreteFunction& u,
                                      std::span<const uint32_t> region) {
    double lo = kInf, hi = -kInf;
    for (uint32_t i : region) {
        lo = std::min(lo, u.values[i]);
        hi = std::max(hi, u.values[i]);
    }
    return {lo, hi};
}

double lq_deviation(const DiscreteFunction& u, std::span<const uint32_t> region, double q,
                    double c, double cell) {
    double acc = 0.0;
    for (uint32_t i : region) acc += std::pow(std::abs(u.values[i] - c), q) * cell;
    return std::pow(acc, 1.0 / q);
}

// log of sum exp((A|u-c|/gnorm)^2) * h^2 over the region
double log_exp_integral(const DiscreteFunction& u, std::span<const uint32_t> region, double c,
                        double scale, double cell) {
    double m = -kInf;
    for (uint32_t i : region) {
        double t = scale * std::abs(u.values[i] - c);
        m = std::max(m, t * t);
    }
    if (m == -kInf) return -kInf;
    double acc = 0.0;
    for (uint32_t i : region) {
        double t = scale * std::abs(u.values[i] - c);
        acc += std::exp(t * t - m);
    }
    return m + std::log(acc) + std::log(cell);
}

}  // namespace

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               int iterations) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int k = 0; k < iterations && b - a > 0.0; ++k) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? f1 : f2;
}

double trudinger_functional(const DiscreteFunction& u, const Point& x0, double r, double lambda,
                            double A) {
    const Grid& g = *u.grid;
    auto ball = g.nodes_in_ball(x0, r);
    auto dilated = g.nodes_in_ball(x0, lambda * r);
    if (ball.empty()) throw config_error("trudinger_functional: empty ball");
    double gnorm = p_dirichlet_energy(u, dilated, 2.0);
    if (gnorm <= 0.0) {
        auto [lo0, hi0] = value_range(u, ball);
        if (hi0 - lo0 == 0.0) {
            // Constant u: the integrand is exp(0) at c = u, so the functional
            // is the measure ratio of the ball.
            return static_cast<double>(ball.size()) * g.cell_area() / (M_PI * r * r);
        }
        throw config_error("trudinger_functional: zero gradient");
    }
    double scale = A / gnorm;
    double cell = g.cell_area();
    auto [lo, hi] = value_range(u, ball);
    double log_norm = std::log(M_PI * r * r);
    auto objective = [&](double c) { return log_exp_integral(u, ball, c, scale, cell); };
    double best_log;
    if (hi - lo <= 0.0) {
        best_log = objective(lo);
    } else {
        best_log = golden_section_minimize(objective, lo, hi);
    }
    double v = best_log - log_norm;
    if (v > 700.0) return kInf;
    return std::exp(v);
}

double local_sp_functional(const DiscreteFunction& u, double p, const Point& x0, double r,
                           double lambda, uint64_t pair_seed) {
    if (p < 1.0) throw config_error("local_sp_functional: p must be >= 1");
    const Grid& g = *u.grid;
    auto ball = g.nodes_in_ball(x0, r);
    auto dilated = g.nodes_in_ball(x0, lambda * r);
    if (ball.empty()) throw config_error("local_sp_functional: empty ball");

    if (p == 2.0) return trudinger_functional(u, x0, r, lambda, 1.0);

    double energy = p_dirichlet_energy(u, dilated, p);
    if (energy <= 0.0) throw config_error("local_sp_functional: zero gradient energy");

    if (p < 2.0) {
        double q = 2.0 * p / (2.0 - p);
        double cell = g.cell_area();
        auto [lo, hi] = value_range(u, ball);
        if (hi - lo <= 0.0) return 0.0;
        auto objective = [&](double c) { return lq_deviation(u, ball, q, c, cell); };
        double numer = golden_section_minimize(objective, lo, hi);
        return numer / energy;
    }

    // p > 2: Hoelder quotient over ball node pairs.
    double expo = 1.0 - 2.0 / p;
    double min_sep = 4.0 * g.spacing();
    double best = 0.0;
    size_t n = ball.size();
    if (n < 2) return 0.0;
    size_t all_pairs = n * (n - 1) / 2;
    if (all_pairs <= 200000) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                double sep = distance(g.node(ball[i]), g.node(ball[j]));
                if (sep < min_sep) continue;
                double q = std::abs(u.values[ball[i]] - u.values[ball[j]]) / std::pow(sep, expo);
                best = std::max(best, q);
            }
        }
    } else {
        RandomStream rng(pair_seed * 0x2545f491ULL + 7);
        for (int k = 0; k < 200000; ++k) {
            uint32_t a = ball[rng.below(n)];
            uint32_t b = ball[rng.below(n)];
            double sep = distance(g.node(a), g.node(b));
            if (sep < min_sep) continue;
            double q = std::abs(u.values[a] - u.values[b]) / std::pow(sep, expo);
            best = std::max(best, q);
        }
    }
    return best / energy;
}

double orlicz_norm(const DiscreteFunction& f, std::span<const uint32_t> region) {
    const Grid& g = *f.grid;
    double cell = g.cell_area();
    double fmax = 0.0;
    for (uint32_t i : region) fmax = std::max(fmax, std::abs(f.values[i]));
    if (fmax == 0.0) return 0.0;

    auto phi_sum_exceeds_one = [&](double s) {
        // phi(t) = exp(t^2) - 1, summed with weight h^2; early exit on
        // overflow-sized terms.
        double acc = 0.0;
        for (uint32_t i : region) {
            double t = std::abs(f.values[i]) / s;
            double t2 = t * t;
            if (t2 > 700.0) return true;
            acc += (std::exp(t2) - 1.0) * cell;
            if (acc > 1.0) return true;
        }
        return false;
    };

    double hi = fmax;
    while (phi_sum_exceeds_one(hi)) hi *= 2.0;
    double lo = hi;
    while (!phi_sum_exceeds_one(lo)) lo *= 0.5;
    for (int k = 0; k < 200; ++k) {
        double mid = 0.5 * (lo + hi);
        if (phi_sum_exceeds_one(mid))
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double poincare_quotient(const DiscreteFunction& u, double p, const Point& x0, double r,
                         double lambda) {
    const Grid& g = *u.grid;
    auto ball = g.nodes_in_ball(x0, r);
    auto dilated = g.nodes_in_ball(x0, lambda * r);
    if (ball.empty() || dilated.empty()) throw config_error("poincare_quotient: empty ball");

    double mean = mean_over(u, ball);
    double dev = 0.0;
    for (uint32_t i : ball) dev += std::abs(u.values[i] - mean);
    dev /= static_cast<double>(ball.size());

    double acc = 0.0;
    for (uint32_t i : dilated) {
        Point grad = discrete_gradient(u, i);
        acc += std::pow(std::hypot(grad.x, grad.y), p);
    }
    acc /= static_cast<double>(dilated.size());
    double denom = r * std::pow(acc, 1.0 / p);
    if (denom <= 0.0) throw config_error("poincare_quotient: zero gradient energy");
    return dev / denom;
}

double morrey_quotient(const DiscreteFunction& u, double p, const Point& x0, double r,
                       double lambda, const Sampler& s) {
    if (p <= 2.0) throw config_error("morrey_quotient: requires p > 2");
    const Grid& g = *u.grid;
    auto ball = g.nodes_in_ball(x0, r);
    auto dilated = g.nodes_in_ball(x0, lambda * r);
    double energy = p_dirichlet_energy(u, dilated, p);
    if (energy <= 0.0) throw config_error("morrey_quotient: zero gradient energy");
    if (ball.size() < 2) return 0.0;

    double expo = 1.0 - 2.0 / p;
    double min_sep = 4.0 * g.spacing();
    double best = 0.0;
    RandomStream rng(s.seed * 0x7f4a7c15ULL + 11);
    size_t n = ball.size();
    size_t all_pairs = n * (n - 1) / 2;
    auto consider = [&](uint32_t a, uint32_t b) {
        double sep = distance(g.node(a), g.node(b));
        if (sep < min_sep) return;
        double q = std::abs(u.values[a] - u.values[b]) / (std::pow(sep, expo) * energy);
        best = std::max(best, q);
    };
    if (all_pairs <= static_cast<size_t>(s.n_pairs)) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) consider(ball[i], ball[j]);
    } else {
        for (int k = 0; k < s.n_pairs; ++k) consider(ball[rng.below(n)], ball[rng.below(n)]);
    }
    return best;
}

}  // namespace domainlab
