#ifndef DOMAINLAB_SWEEP_HPP
#define DOMAINLAB_SWEEP_HPP

#include <string>
#include <vector>

#include "domainlab/functionals.hpp"
#include "domainlab/test_functions.hpp"

namespace domainlab {

struct Certificate {
    std::string domain;
    double p = 2.0;
    double lambda = 2.0;
    Point x0;
    double r = 0.0;
    std::string side;  // "lower_bound" or "upper_estimate"
    double constant = 0.0;
    std::string test_function_id;
    double h = 0.0;
    uint64_t seed = 0;
    std::string note;
};

struct CertificateTable {
    std::vector<Certificate> rows;

    double max_lower_bound() const;
    double min_upper_estimate() const;
};

// Fraction b with |B_Omega(x, b r)| as close as bisection gets to
// ratio * |B_Omega(x, r)|; the achieved measure ratio is reported.
double halving_radius_fraction(const Grid& g, const Point& x, double r, double target_ratio,
                               double* achieved_ratio);

// Largest b on a fine ladder in (0, 1/16) such that removing B(x0, b r)
// splits the nodes of the annulus r/2 <= |n - x0| < r into at least two
// components; 0 when no rung separates.
double separating_b(const Grid& g, const Point& x0, double r);

// Lower-bound certificates from the ring test functions (two b values and
// one measure-halving annulus ramp) plus, for p = 2, the eigenvalue upper
// estimate at lambda = 1. Per-cell failures are recorded in the row note.
CertificateTable sp_sweep(const Grid& g, double p, const std::vector<Point>& centers,
                          const std::vector<double>& radii, double lambda, uint64_t seed);

}  // namespace domainlab

#endif
