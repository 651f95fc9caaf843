#ifndef DOMAINLAB_SPECTRAL_HPP
#define DOMAINLAB_SPECTRAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "domainlab/grid.hpp"

namespace domainlab {

// Five-point Neumann-type graph Laplacian on the subgrid induced by a node
// set: axis edges only, edge weight 1/h^2, unit node mass.
class SubgridLaplacian {
  public:
    SubgridLaplacian(const Grid& g, std::span<const uint32_t> nodes);

    size_t n() const { return n_; }
    bool connected() const { return connected_; }

    void apply(const std::vector<double>& x, std::vector<double>& out) const;

    // Smallest nonzero eigenvalue by inverse power iteration over the
    // mean-zero subspace (CG inner solves). Relative eigenvalue tolerance
    // `tol`, iteration cap `max_iter`; throws convergence_error on failure.
    double smallest_nonzero_eigenvalue(double tol = 1e-8, int max_iter = 10000) const;

  private:
    size_t n_ = 0;
    bool connected_ = true;
    double w_ = 0.0;  // 1/h^2
    std::vector<std::pair<uint32_t, uint32_t>> edges_;  // local indices
    std::vector<int> degree_;
};

// 1/(r sqrt(mu_1)) for the L^2 Poincare constant surrogate on
// B(x0, r) cap Omega at lambda = 1. Infinite when the subgrid is
// disconnected.
double poincare_constant_l2(const Grid& g, const Point& x0, double r);

}  // namespace domainlab

#endif
