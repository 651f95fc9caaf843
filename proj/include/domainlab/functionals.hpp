#ifndef DOMAINLAB_FUNCTIONALS_HPP
#define DOMAINLAB_FUNCTIONALS_HPP

#include <functional>
#include <span>

#include "domainlab/discrete_function.hpp"
#include "domainlab/sampler.hpp"

namespace domainlab {

// Golden-section minimizer for unimodal f on [lo, hi].
double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               int iterations = 120);

// Quotient LHS/RHS of the local Sobolev-Poincare inequality at (x0, r,
// lambda) for the function u, with n = 2:
//   p < 2: best-constant L^q deviation over the ball, q = 2p/(2-p)
//   p = 2: exponential-integral functional (see trudinger_functional)
//   p > 2: sampled Hoelder quotient over ball pairs
// Any u gives a lower bound for the domain constant. Throws config_error on
// zero gradient energy.
double local_sp_functional(const DiscreteFunction& u, double p, const Point& x0, double r,
                           double lambda, uint64_t pair_seed = 0);

// inf over c of (1/(pi r^2)) * sum_{ball} exp((A|u-c| / ||grad u||_{L2(lambda
// ball)})^2) h^2, evaluated in log space.
double trudinger_functional(const DiscreteFunction& u, const Point& x0, double r, double lambda,
                            double A);

// Luxemburg norm inf{s > 0 : sum phi(|f|/s) h^2 <= 1}, phi(t) = exp(t^2) - 1.
double orlicz_norm(const DiscreteFunction& f, std::span<const uint32_t> region);

// Mean absolute deviation over the ball divided by r times the p-mean of
// |grad u| over the lambda-ball.
double poincare_quotient(const DiscreteFunction& u, double p, const Point& x0, double r,
                         double lambda);

// max over sampled pairs in the ball of |u(x1)-u(x2)| /
// (|x1-x2|^(1-2/p) * ||grad u||_{Lp(lambda ball)}), for p > 2.
double morrey_quotient(const DiscreteFunction& u, double p, const Point& x0, double r,
                       double lambda, const Sampler& s);

}  // namespace domainlab

#endif
