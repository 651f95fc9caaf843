#ifndef DOMAINLAB_SAMPLER_HPP
#define DOMAINLAB_SAMPLER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domainlab/grid.hpp"

namespace domainlab {

// Deterministic pseudo-random stream (splitmix64). Reduction by
// multiply-shift keeps the stream identical across platforms and standard
// library versions.
class RandomStream {
  public:
    explicit RandomStream(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    uint64_t state_;
};

struct Sampler {
    enum class Strategy { uniform_nodes, boundary_biased };

    uint64_t seed = 0;
    int n_pairs = 200;
    int n_centers = 24;
    std::vector<double> radii;  // defaults to the dyadic ladder below
    Strategy strategy = Strategy::uniform_nodes;

    std::string describe() const;

    // Geometric ladder {2^-k * diam, k = k0..k0+count-1}.
    static std::vector<double> dyadic_radii(double diam, int k0, int count);
};

// One node index; boundary_biased picks the shallowest of a 4-candidate
// tournament.
uint32_t sample_node(const Grid& g, RandomStream& rng, Sampler::Strategy strategy);

// n_pairs node pairs with |x - y| >= 4h. Generated sequentially, so a run
// with a smaller n_pairs yields a prefix of a larger run at the same seed.
std::vector<std::pair<uint32_t, uint32_t>> sample_pairs(const Grid& g, const Sampler& s);

std::vector<uint32_t> sample_centers(const Grid& g, const Sampler& s);

}  // namespace domainlab

#endif
