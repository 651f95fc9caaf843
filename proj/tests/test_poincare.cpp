#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#include "domainlab/capacity.hpp"
#include "domainlab/errors.hpp"
#include "domainlab/gallery.hpp"
#include "domainlab/geodesic.hpp"
#include "domainlab/spectral.hpp"
#include "domainlab/sweep.hpp"

using namespace domainlab;

namespace {

std::shared_ptr<PolygonalDomain> shared(const std::string& name,
                                        std::map<std::string, double> params = {}) {
    return std::make_shared<PolygonalDomain>(make_gallery(name, params).domain);
}

std::shared_ptr<PolygonalDomain> unit_square() {
    return std::make_shared<PolygonalDomain>(parse_domain("outer: 0 0; 1 0; 1 1; 0 1"));
}

DiscreteFunction coordinate_x(const Grid& g) {
    DiscreteFunction u(g);
    for (size_t i = 0; i < g.node_count(); ++i) u.values[i] = g.node(i).x;
    return u;
}

std::vector<uint32_t> all_nodes(const Grid& g) {
    std::vector<uint32_t> out(g.node_count());
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint32_t>(i);
    return out;
}

}  // namespace

TEST_CASE("p-Dirichlet energy basics") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    DiscreteFunction c(g, 3.0);
    CHECK(p_dirichlet_energy(c, all_nodes(g), 2.0) == 0.0);

    DiscreteFunction u = coordinate_x(g);
    double e = p_dirichlet_energy(u, all_nodes(g), 2.0);
    CHECK(e == doctest::Approx(1.0).epsilon(3.0 * g.spacing()));
}

TEST_CASE("log ring energy matches the annulus quadrature oracle") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 256);
    Point x0{0.5, 0.5};
    double r = 0.25, b = 0.05, p = 1.5;
    DiscreteFunction u = log_test_function(g, x0, r, b, {0.9, 0.9});
    auto ball = g.nodes_in_ball(x0, 2.0 * r);
    double energy = p_dirichlet_energy(u, ball, p);

    // Independent polar quadrature of |grad u|^p = (1/(log(1/2b) rho))^p over
    // the annulus b r <= rho <= r/2.
    double denom = std::log(1.0 / (2.0 * b));
    double acc = 0.0;
    int nr = 4000, nth = 512;
    for (int i = 0; i < nr; ++i) {
        double rho = b * r + (0.5 * r - b * r) * (i + 0.5) / nr;
        double drho = (0.5 * r - b * r) / nr;
        acc += std::pow(1.0 / (denom * rho), p) * rho * drho * 2.0 * M_PI;
        (void)nth;
    }
    double oracle = std::pow(acc, 1.0 / p);
    CHECK(energy == doctest::Approx(oracle).epsilon(0.10));
}

TEST_CASE("local SP functional rejects constants and scales correctly") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    DiscreteFunction c(g, 1.0);
    CHECK_THROWS_AS(local_sp_functional(c, 1.0, {0.5, 0.5}, 0.25, 1.0), config_error);

    DiscreteFunction u = coordinate_x(g);
    double q = local_sp_functional(u, 1.0, {0.5, 0.5}, 0.25, 1.0);
    CHECK(std::isfinite(q));
    CHECK(q > 0.0);

    // Doubling the domain scale leaves the p = 1 quotient unchanged
    // (n = 2, p = 1 gives q = 2, and both sides scale alike).
    auto big = std::make_shared<PolygonalDomain>(
        unit_square()->similarity_transform(2.0, 0.0, {0, 0}));
    Grid g2 = Grid::discretize(big, 2.0 / 128);
    DiscreteFunction u2 = coordinate_x(g2);
    double q2 = local_sp_functional(u2, 1.0, {1.0, 1.0}, 0.5, 1.0);
    CHECK(q2 == doctest::Approx(q).epsilon(0.03));
}

TEST_CASE("trudinger functional on constants and monotonicity in A") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    DiscreteFunction zero(g, 0.0);
    double v = trudinger_functional(zero, {0.5, 0.5}, 0.25, 2.0, 1.0);
    CHECK(v <= 1.0 + 1e-9);  // measure ratio of the ball

    DiscreteFunction u = log_test_function(g, {0.5, 0.5}, 0.25, 0.03, {0.9, 0.9});
    double a1 = trudinger_functional(u, {0.5, 0.5}, 0.25, 2.0, 1.0);
    double a05 = trudinger_functional(u, {0.5, 0.5}, 0.25, 2.0, 0.5);
    CHECK(a05 <= a1 + 1e-12);
}

TEST_CASE("orlicz norm homogeneity") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 64);
    DiscreteFunction f(g);
    RandomStream rng(17);
    for (size_t i = 0; i < g.node_count(); ++i) f.values[i] = rng.unit() - 0.3;
    auto region = all_nodes(g);
    double n1 = orlicz_norm(f, region);
    DiscreteFunction f3(g);
    for (size_t i = 0; i < g.node_count(); ++i) f3.values[i] = 3.0 * f.values[i];
    double n3 = orlicz_norm(f3, region);
    CHECK(n3 == doctest::Approx(3.0 * n1).epsilon(1e-9));
    DiscreteFunction z(g, 0.0);
    CHECK(orlicz_norm(z, region) == 0.0);
}

TEST_CASE("annulus ramp hits the stated values") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    Point x{0.5, 0.5};
    double r = 0.25;
    DiscreteFunction u = annulus_test_function(g, x, r, 1.0, 0.5);
    CHECK(u.values[g.snap(x)] == 1.0);

    // Node with intrinsic distance about 3r/4 carries value about 1/2.
    uint32_t probe = g.snap({0.5 + 0.1875, 0.5});
    CHECK(u.values[probe] == doctest::Approx(0.5).epsilon(0.08));

    // Support is confined to the intrinsic ball of radius b_prev * r.
    ShortestPathField f = grid_distance_field(g, g.snap(x), 1.0);
    for (size_t i = 0; i < g.node_count(); ++i) {
        if (f.dist[i] >= r) CHECK(u.values[i] == 0.0);
    }
    CHECK_THROWS_AS(annulus_test_function(g, x, r, 0.5, 0.9), config_error);
}

TEST_CASE("annulus ramp gradient respects the Lipschitz envelope") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    double r = 0.25, b_prev = 1.0, b_next = 0.5;
    DiscreteFunction u = annulus_test_function(g, {0.5, 0.5}, r, b_prev, b_next);
    double bound = 1.0 / ((b_prev - b_next) * r) * (1.0 + 5.0 * g.spacing() / r);
    RandomStream rng(29);
    for (int k = 0; k < 100; ++k) {
        size_t i = rng.below(g.node_count());
        Point grad = discrete_gradient(u, i);
        CHECK(std::hypot(grad.x, grad.y) <= bound + 1e-9);
    }
}

TEST_CASE("log ring function values and gradient") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 256);
    Point x0{0.5, 0.5};
    double r = 0.3, b = 0.04;
    DiscreteFunction u = log_test_function(g, x0, r, b, {0.95, 0.95});
    double denom = std::log(1.0 / (2.0 * b));

    for (size_t i = 0; i < g.node_count(); ++i) {
        double rho = distance(g.node(i), x0);
        if (rho >= 0.5 * r) CHECK(u.values[i] == 1.0);
        if (rho < b * r) CHECK(u.values[i] == 0.0);
    }
    // Ring value formula at a probe node.
    uint32_t probe = g.snap({0.5 + 0.1, 0.5});
    double rho = distance(g.node(probe), x0);
    CHECK(u.values[probe] == doctest::Approx(std::log(rho / (b * r)) / denom).epsilon(1e-12));

    // Finite differences track the analytic gradient 1/(log(1/2b) rho).
    RandomStream rng(31);
    int checked = 0;
    while (checked < 100) {
        size_t i = rng.below(g.node_count());
        double rr = distance(g.node(i), x0);
        if (rr < b * r + 2.0 * g.spacing() || rr > 0.5 * r - 2.0 * g.spacing()) continue;
        Point grad = discrete_gradient(u, i);
        double analytic = 1.0 / (denom * rr);
        double tol = 8.0 * g.spacing() / rr;  // first order in h, pinned factor
        CHECK(std::hypot(grad.x, grad.y) == doctest::Approx(analytic).epsilon(tol));
        ++checked;
    }
    CHECK_THROWS_AS(log_test_function(g, x0, r, 0.2, {0.95, 0.95}), config_error);
    CHECK_THROWS_AS(log_test_function(g, x0, r, b, {0.5, 0.5}), config_error);
}

TEST_CASE("poincare quotient against dense quadrature on the linear function") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    DiscreteFunction u = coordinate_x(g);
    double q = poincare_quotient(u, 2.0, {0.5, 0.5}, 0.25, 1.0);

    // Oracle: mean |x - 0.5| over the disk of radius R is 4R/(3*pi); the
    // gradient p-mean is exactly 1, so the quotient is 4/(3*pi).
    double oracle = 4.0 / (3.0 * M_PI);
    CHECK(q == doctest::Approx(oracle).epsilon(0.05));

    DiscreteFunction c(g, 2.0);
    CHECK_THROWS_AS(poincare_quotient(c, 2.0, {0.5, 0.5}, 0.25, 1.0), config_error);
}

TEST_CASE("poincare quotient power-mean monotonicity in p") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 64);
    DiscreteFunction u = log_test_function(g, {0.5, 0.5}, 0.3, 0.05, {0.9, 0.9});
    double q1 = poincare_quotient(u, 1.0, {0.5, 0.5}, 0.2, 1.5);
    double q2 = poincare_quotient(u, 2.0, {0.5, 0.5}, 0.2, 1.5);
    double q4 = poincare_quotient(u, 4.0, {0.5, 0.5}, 0.2, 1.5);
    CHECK(q1 >= q2 - 1e-12);
    CHECK(q2 >= q4 - 1e-12);
}

TEST_CASE("two-node Laplacian pins the eigen normalization") {
    // Thin rectangle holding exactly two horizontally adjacent nodes.
    auto thin = std::make_shared<PolygonalDomain>(
        parse_domain("outer: 0 0; 0.21 0; 0.21 0.11; 0 0.11"));
    double h = 0.05;
    Grid g = Grid::discretize(thin, h);
    // Pick two adjacent nodes on the same row.
    uint32_t a = g.snap({0.075, 0.075});
    const auto& ax = g.axis_neighbors(a);
    REQUIRE(ax[0] >= 0);
    std::vector<uint32_t> pair{a, static_cast<uint32_t>(ax[0])};
    SubgridLaplacian lap(g, pair);
    double mu = lap.smallest_nonzero_eigenvalue();
    CHECK(mu == doctest::Approx(2.0 / (h * h)).epsilon(1e-9));
    // Constant 1/(r sqrt(mu)) at r = h gives 1/sqrt(2).
    CHECK(1.0 / (h * std::sqrt(mu)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("eigen constant stabilizes under refinement") {
    auto sq = unit_square();
    double r = sq->diameter();
    Grid g64 = Grid::discretize(sq, 1.0 / 64);
    Grid g128 = Grid::discretize(sq, 1.0 / 128);
    double c64 = poincare_constant_l2(g64, {0.5, 0.5}, r);
    double c128 = poincare_constant_l2(g128, {0.5, 0.5}, r);
    CHECK(c64 == doctest::Approx(c128).epsilon(0.05));
}

TEST_CASE("eigen constant explodes for slit-straddling balls") {
    auto slit = shared("slit_disk", {{"w", 1.0 / 64}, {"m", 64}});
    Grid g = Grid::discretize(slit, 1.0 / 128);
    // Ball away from the passage: the two sides are separate components.
    double c_slit = poincare_constant_l2(g, {0.5, 0.0}, 0.25);

    auto disk = shared("disk");
    Grid gd = Grid::discretize(disk, 1.0 / 128);
    double c_disk = poincare_constant_l2(gd, {0.5, 0.0}, 0.25);
    CHECK(c_slit >= 5.0 * c_disk);
}

TEST_CASE("morrey quotient on the linear function against exhaustive pairs") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 32);
    DiscreteFunction u = coordinate_x(g);
    Sampler s;
    s.n_pairs = 1 << 30;  // exhaustive branch
    double q = morrey_quotient(u, 4.0, {0.5, 0.5}, 0.4, 1.0, s);

    auto ball = g.nodes_in_ball({0.5, 0.5}, 0.4);
    double energy = p_dirichlet_energy(u, g.nodes_in_ball({0.5, 0.5}, 0.4), 4.0);
    double best = 0.0;
    for (size_t i = 0; i < ball.size(); ++i) {
        for (size_t j = i + 1; j < ball.size(); ++j) {
            double sep = distance(g.node(ball[i]), g.node(ball[j]));
            if (sep < 4.0 * g.spacing()) continue;
            best = std::max(best, std::abs(g.node(ball[i]).x - g.node(ball[j]).x) /
                                      (std::pow(sep, 0.5) * energy));
        }
    }
    CHECK(q == doctest::Approx(best).epsilon(1e-12));
    DiscreteFunction c(g, 1.0);
    CHECK_THROWS_AS(morrey_quotient(c, 4.0, {0.5, 0.5}, 0.4, 1.0, s), config_error);
}

TEST_CASE("capacity of the annulus condenser") {
    auto disk = shared("disk");
    Grid g = Grid::discretize(disk, 1.0 / 128);
    CapacityProblem prob;
    prob.p = 2.0;
    for (size_t i = 0; i < g.node_count(); ++i) {
        double d = distance(g.node(i), {0.0, 0.0});
        if (d <= 0.1) prob.U.push_back(static_cast<uint32_t>(i));
        if (d >= 0.4) prob.V.push_back(static_cast<uint32_t>(i));
    }
    CapacityResult res = capacity(g, prob);
    CHECK(res.value == doctest::Approx(2.0 * M_PI / std::log(4.0)).epsilon(0.08));
    for (double v : res.potential) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("capacity is zero across disconnected components") {
    auto slit = shared("slit_disk", {{"w", 1.0 / 64}, {"m", 64}});
    Grid g = Grid::discretize(slit, 1.0 / 16);  // gap unresolved: two components
    REQUIRE(g.component_count() >= 2);
    CapacityProblem prob;
    prob.p = 2.0;
    for (size_t i = 0; i < g.node_count(); ++i) {
        Point p = g.node(i);
        if (p.y > 0.3 && std::abs(p.x) < 0.3) prob.U.push_back(static_cast<uint32_t>(i));
        if (p.y < -0.3 && std::abs(p.x) < 0.3) prob.V.push_back(static_cast<uint32_t>(i));
    }
    CapacityResult res = capacity(g, prob);
    CHECK(res.value == 0.0);
}

TEST_CASE("capacity monotonicity and problem validation") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 64);
    auto strip = [&](double ylo, double yhi) {
        std::vector<uint32_t> out;
        for (size_t i = 0; i < g.node_count(); ++i) {
            if (g.node(i).y >= ylo && g.node(i).y <= yhi)
                out.push_back(static_cast<uint32_t>(i));
        }
        return out;
    };
    CapacityProblem small{strip(0.0, 0.1), strip(0.9, 1.0), 2.0};
    CapacityProblem large{strip(0.0, 0.3), strip(0.9, 1.0), 2.0};
    double v_small = capacity(g, small).value;
    double v_large = capacity(g, large).value;
    CHECK(v_large >= v_small - 1e-9);

    CapacityProblem overlap{strip(0.0, 0.5), strip(0.4, 1.0), 2.0};
    CHECK_THROWS_AS(capacity(g, overlap), config_error);
    CapacityProblem close{strip(0.0, 0.1), strip(0.11, 1.0), 2.0};
    CHECK_THROWS_AS(capacity(g, close), config_error);
}

TEST_CASE("two-dimensional p=2 capacity is similarity invariant") {
    auto disk = shared("disk");
    auto run = [&](std::shared_ptr<const PolygonalDomain> dom, double h, double scale) {
        Grid g = Grid::discretize(dom, h);
        CapacityProblem prob;
        prob.p = 2.0;
        for (size_t i = 0; i < g.node_count(); ++i) {
            double d = distance(g.node(i), {0.0, 0.0});
            if (d <= 0.1 * scale) prob.U.push_back(static_cast<uint32_t>(i));
            if (d >= 0.4 * scale) prob.V.push_back(static_cast<uint32_t>(i));
        }
        return capacity(g, prob).value;
    };
    double v1 = run(disk, 1.0 / 128, 1.0);
    auto big = std::make_shared<PolygonalDomain>(disk->similarity_transform(2.0, 0.0, {0, 0}));
    double v2 = run(big, 2.0 / 128, 2.0);
    CHECK(v2 == doctest::Approx(v1).epsilon(0.02));
}

TEST_CASE("capacity shrinks when the ambient domain shrinks") {
    // Same condenser, smaller surrounding domain: fewer admissible gradients.
    auto sq = unit_square();
    auto narrow = std::make_shared<PolygonalDomain>(
        parse_domain("outer: 0.2 0; 0.8 0; 0.8 1; 0.2 1"));
    auto run = [&](std::shared_ptr<const PolygonalDomain> dom) {
        Grid g = Grid::discretize(dom, 1.0 / 64);
        CapacityProblem prob;
        prob.p = 2.0;
        for (size_t i = 0; i < g.node_count(); ++i) {
            if (g.node(i).y <= 0.1) prob.U.push_back(static_cast<uint32_t>(i));
            if (g.node(i).y >= 0.9) prob.V.push_back(static_cast<uint32_t>(i));
        }
        return capacity(g, prob).value;
    };
    CHECK(run(narrow) <= run(sq) + 1e-9);
}

TEST_CASE("p != 2 capacity descends and respects monotonicity") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 32);
    auto strip = [&](double ylo, double yhi) {
        std::vector<uint32_t> out;
        for (size_t i = 0; i < g.node_count(); ++i) {
            if (g.node(i).y >= ylo && g.node(i).y <= yhi)
                out.push_back(static_cast<uint32_t>(i));
        }
        return out;
    };
    CapacityProblem p3{strip(0.0, 0.1), strip(0.9, 1.0), 3.0};
    CapacityResult res = capacity(g, p3);
    CHECK(std::isfinite(res.value));
    CHECK(res.value > 0.0);
    // The straight profile u = y is admissible with energy 1, so the
    // infimum cannot exceed it by more than solver slack.
    CHECK(res.value <= 1.05);
}

TEST_CASE("sweep emits ordered certificates and a single global cell degenerates") {
    auto disk = shared("disk");
    Grid g = Grid::discretize(disk, 1.0 / 64);
    CertificateTable t = sp_sweep(g, 2.0, {{0.0, 0.0}}, {disk->diameter()}, 2.0, 0);
    CHECK(t.rows.size() >= 3);
    CHECK(std::isfinite(t.max_lower_bound()));
    for (const Certificate& c : t.rows) {
        CHECK(c.r == disk->diameter());
        CHECK(c.h == g.spacing());
    }
}

TEST_CASE("lower-bound certificates survive refinement") {
    auto disk = shared("disk");
    Grid g64 = Grid::discretize(disk, 1.0 / 64);
    Grid g128 = Grid::discretize(disk, 1.0 / 128);
    Point x0{0.0, 0.0};
    double r = 0.5;
    DiscreteFunction u64 = log_test_function(g64, x0, r, 1.0 / 32, {0.9, 0.0});
    DiscreteFunction u128 = log_test_function(g128, x0, r, 1.0 / 32, {0.9, 0.0});
    double c64 = local_sp_functional(u64, 2.0, x0, r, 2.0);
    double c128 = local_sp_functional(u128, 2.0, x0, r, 2.0);
    // Declared quadrature tolerance: refinement may not lose more than 10%.
    CHECK(c128 >= 0.9 * c64);
}
