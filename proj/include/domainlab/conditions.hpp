#ifndef DOMAINLAB_CONDITIONS_HPP
#define DOMAINLAB_CONDITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "domainlab/geodesic.hpp"
#include "domainlab/sampler.hpp"
#include "domainlab/visibility.hpp"

namespace domainlab {

enum class ConditionKind {
    quasiconvex,
    llc2,
    john,
    uniform,
    cigar,
    carrot,
    ahlfors,
    ahlfors_intrinsic,
};

enum class Sidedness {
    upper_bound_of_true,
    lower_bound_of_true,
    two_sided_within_tol,
};

const char* to_string(ConditionKind k);
const char* to_string(Sidedness s);

// Sampled extremum of a condition constant with the witness that attained
// it. The sidedness is fixed per kind: sampled sups are lower bounds of the
// true constant, sampled infs (Ahlfors) upper bounds.
struct ConditionEstimate {
    ConditionKind kind;
    double constant = 0.0;
    Sidedness sidedness = Sidedness::lower_bound_of_true;
    std::vector<Point> witness_points;
    std::vector<double> witness_values;
    double alpha = -1.0;
    double beta = -1.0;
    uint64_t seed = 0;
    double h = 0.0;
    std::string params;
};

// sup over sampled pairs of d_Omega(x, y) / |x - y|.
ConditionEstimate quasiconvexity_constant(const Grid& g, const VisibilityGraph& vg,
                                          const Sampler& s);

// Largest dyadic b in {1, 1/2, ..., 2^-10} such that all grid nodes outside
// B(z, r) lie in one component of the subgrid outside B(z, b r). Returns 0
// when even the smallest rung fails.
double llc2_critical_b(const Grid& g, const Point& z, double r);

ConditionEstimate cigar_constant(const Grid& g, double alpha, double beta, const Sampler& s);

ConditionEstimate carrot_constant(const Grid& g, double alpha, const Point& x0, const Sampler& s);

ConditionEstimate uniformity_estimate(const Grid& g, const VisibilityGraph& vg, const Sampler& s);

ConditionEstimate john_estimate(const Grid& g, const VisibilityGraph& vg, const Point& x0,
                                const Sampler& s);

ConditionEstimate ahlfors_constant(const Grid& g, bool intrinsic, const Sampler& s);

// The candidate-curve exponents used by the uniform/John searches.
inline constexpr double kCandidateAlphas[5] = {0.0, 0.25, 0.5, 0.75, 1.0};

// min(cap, min over interior samples of dist(z)/(|x-z||y-z|/|x-y|), |x-y|/l).
// Samples are (point, arclength, boundary distance) triples along the curve.
double uniform_epsilon_of_curve(const Point& x, const Point& y,
                                const std::vector<std::pair<Point, double>>& samples,
                                const std::vector<double>& sample_dists, double curve_length);

}  // namespace domainlab

#endif
