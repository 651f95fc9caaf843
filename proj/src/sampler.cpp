#include "domainlab/sampler.hpp"

#include <algorithm>

namespace domainlab {

std::string Sampler::describe() const {
    std::string s = "seed=" + std::to_string(seed) + " pairs=" + std::to_string(n_pairs) +
                    " centers=" + std::to_string(n_centers) + " strategy=";
    s += (strategy == Strategy::uniform_nodes) ? "uniform_nodes" : "boundary_biased";
    return s;
}

std::vector<double> Sampler::dyadic_radii(double diam, int k0, int count) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = k0; k < k0 + count; ++k) out.push_back(std::ldexp(diam, -k));
    return out;
}

uint32_t sample_node(const Grid& g, RandomStream& rng, Sampler::Strategy strategy) {
    uint64_t n = g.node_count();
    if (strategy == Sampler::Strategy::uniform_nodes) {
        return static_cast<uint32_t>(rng.below(n));
    }
    uint32_t best = static_cast<uint32_t>(rng.below(n));
    for (int k = 1; k < 4; ++k) {
        uint32_t cand = static_cast<uint32_t>(rng.below(n));
        if (g.dist(cand) < g.dist(best)) best = cand;
    }
    return best;
}

std::vector<std::pair<uint32_t, uint32_t>> sample_pairs(const Grid& g, const Sampler& s) {
    RandomStream rng(s.seed * 0x51ed2701ULL + 1);
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(static_cast<size_t>(s.n_pairs));
    double min_sep = 4.0 * g.spacing();
    int attempts = 0;
    int budget = 64 * std::max(1, s.n_pairs);
    while (static_cast<int>(out.size()) < s.n_pairs && attempts < budget) {
        ++attempts;
        uint32_t a = sample_node(g, rng, s.strategy);
        uint32_t b = sample_node(g, rng, s.strategy);
        if (a == b) continue;
        if (distance(g.node(a), g.node(b)) < min_sep) continue;
        out.emplace_back(a, b);
    }
    return out;
}

std::vector<uint32_t> sample_centers(const Grid& g, const Sampler& s) {
    RandomStream rng(s.seed * 0x9d7fe1a9ULL + 2);
    std::vector<uint32_t> out;
    out.reserve(static_cast<size_t>(s.n_centers));
    for (int i = 0; i < s.n_centers; ++i) out.push_back(sample_node(g, rng, s.strategy));
    return out;
}

}  // namespace domainlab
