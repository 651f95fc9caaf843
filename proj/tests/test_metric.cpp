#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#include "domainlab/errors.hpp"
#include "domainlab/gallery.hpp"
#include "domainlab/geodesic.hpp"
#include "domainlab/sampler.hpp"
#include "domainlab/visibility.hpp"

using namespace domainlab;

namespace {

std::shared_ptr<PolygonalDomain> shared(const std::string& name,
                                        std::map<std::string, double> params = {}) {
    return std::make_shared<PolygonalDomain>(make_gallery(name, params).domain);
}

std::shared_ptr<PolygonalDomain> unit_square() {
    return std::make_shared<PolygonalDomain>(parse_domain("outer: 0 0; 1 0; 1 1; 0 1"));
}

// 1-D quadrature of dist^(alpha-1) along the straight segment [a, b];
// an oracle independent of the grid path machinery.
double straight_line_integral(const PolygonalDomain& d, Point a, Point b, double alpha, int n) {
    double len = distance(a, b);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = (i + 0.5) / n;
        Point z{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        acc += std::pow(d.distance_to_boundary_unchecked(z), alpha - 1.0) * (len / n);
    }
    return acc;
}

}  // namespace

TEST_CASE("intrinsic distance equals Euclidean on convex domains") {
    auto sq = unit_square();
    VisibilityGraph vg(sq);
    CHECK(vg.distance({0.1, 0.1}, {0.9, 0.9}) ==
          doctest::Approx(std::sqrt(1.28)).epsilon(1e-12));
    CHECK_THROWS_AS(intrinsic_distance(*sq, {0.1, 0.1}, {2.0, 0.5}), config_error);
}

TEST_CASE("intrinsic distance bends at the reflex corner of the L-shape") {
    auto L = shared("l_shape");
    VisibilityGraph vg(L);
    // Two-segment path through (0.5, 0.5); closed form sqrt(0.5).
    CHECK(vg.distance({0.25, 0.75}, {0.75, 0.25}) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    auto path = vg.shortest_path({0.25, 0.75}, {0.75, 0.25});
    REQUIRE(path.curve.size() == 3);
    CHECK(path.curve.vertices()[1].x == doctest::Approx(0.5));
    CHECK(path.curve.vertices()[1].y == doctest::Approx(0.5));
}

TEST_CASE("intrinsic distance crosses the slit near the center") {
    auto slit = shared("slit_disk", {{"w", 1.0 / 64}, {"m", 64}});
    VisibilityGraph vg(slit);
    double d = vg.distance({0.5, 0.05}, {0.5, -0.05});
    CHECK(d >= 1.0);
    CHECK(d <= 1.1);
    // Grid geodesic alpha=1 envelope: above the exact value, below the
    // 8-neighbor metrication bound.
    Grid g = Grid::discretize(slit, 1.0 / 256);
    GeodesicResult r = weighted_geodesic(g, {0.5, 0.05}, {0.5, -0.05}, 1.0);
    double exact = vg.distance(r.from, r.to);
    CHECK(r.value >= exact - 1e-9);
    CHECK(r.value <= 1.09 * exact);
}

TEST_CASE("intrinsic distance is infinite across unresolvable gaps") {
    // At h = 1/16 the passage column of a w = 1/64 slit contains no nodes, so
    // the two sides are separate grid components.
    auto slit = shared("slit_disk", {{"w", 1.0 / 64}, {"m", 64}});
    Grid g = Grid::discretize(slit, 1.0 / 16);
    CHECK(g.component_count() >= 2);
    GeodesicResult r = weighted_geodesic(g, {0.5, 0.25}, {0.5, -0.25}, 1.0);
    CHECK_FALSE(r.reachable());
    CHECK(r.curve.empty());
}

TEST_CASE("weighted geodesic on the square diagonal, alpha = 1") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 256);
    GeodesicResult r = weighted_geodesic(g, {0.1, 0.1}, {0.9, 0.9}, 1.0);
    CHECK(r.value == doctest::Approx(std::sqrt(1.28)).epsilon(0.03));
    CHECK(r.curve.length() == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(r.alpha == 1.0);
}

TEST_CASE("quasihyperbolic value from the square center dominates the radial log") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    double t = 0.25;
    GeodesicResult r = weighted_geodesic(g, {0.5, 0.5}, {0.5, 0.5 - t}, 0.0);
    double lower = std::log(0.5 / (0.5 - t));  // radial monotonicity bound
    CHECK(r.value >= lower - 1e-9);
    CHECK(r.value <= 1.2 * lower);
    // Straight-segment oracle.
    double oracle = straight_line_integral(g.domain(), {0.5, 0.5}, {0.5, 0.25}, 0.0, 4096);
    CHECK(oracle == doctest::Approx(std::log(2.0)).epsilon(1e-3));
}

TEST_CASE("weighted geodesic degenerate endpoints") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 64);
    GeodesicResult r = weighted_geodesic(g, {0.5, 0.5}, {0.5, 0.5}, 0.5);
    CHECK(r.value == 0.0);
    CHECK(r.curve.size() <= 1);
    CHECK_THROWS_AS(weighted_geodesic(g, {0.5, 0.5}, {0.6, 0.5}, 1.5), config_error);
}

TEST_CASE("quasihyperbolic distance on the disk") {
    auto disk = shared("disk");
    Grid g = Grid::discretize(disk, 1.0 / 128);
    CHECK(quasihyperbolic_distance(g, {0.5, 0.1}, {0.5, 0.1}) == 0.0);
    double v = quasihyperbolic_distance(g, {0.0, 0.0}, {0.5, 0.0});
    CHECK(v >= std::log(2.0) - 0.05);
    CHECK(v <= std::log(2.0) + 0.10);
}

TEST_CASE("quasihyperbolic across-slit values grow as the slit narrows") {
    double prev = 0.0;
    for (double w : {1.0 / 16, 1.0 / 32, 1.0 / 64}) {
        auto slit = shared("slit_disk", {{"w", w}, {"m", 64}});
        Grid g = Grid::discretize(slit, 1.0 / 256);
        double v = quasihyperbolic_distance(g, {0.5, w}, {0.5, -w});
        CHECK(v > prev);
        CHECK(v >= 0.5 * std::log(1.0 / w));
        prev = v;
    }
}

TEST_CASE("intrinsic ball on the square") {
    Grid g = Grid::discretize(unit_square(), 1.0 / 128);
    IntrinsicBall ball = intrinsic_ball(g, {0.5, 0.5}, 0.25);
    CHECK(ball.measure == doctest::Approx(M_PI * 0.25 * 0.25).epsilon(0.10));
    IntrinsicBall whole = intrinsic_ball(g, {0.5, 0.5}, 2.0);
    CHECK(whole.measure == doctest::Approx(1.0).epsilon(0.02));
    CHECK(whole.node_set.size() == g.node_count());
}

TEST_CASE("intrinsic ball loses the far side of the slit") {
    auto slit = shared("slit_disk", {{"w", 1.0 / 64}, {"m", 64}});
    Grid g = Grid::discretize(slit, 1.0 / 256);
    Point x{0.5, 1.0 / 64};
    IntrinsicBall ball = intrinsic_ball(g, x, 0.3);
    size_t euclid_count = g.nodes_in_ball(g.node(g.snap(x)), 0.3).size();
    CHECK(ball.node_set.size() < euclid_count);
    // Every intrinsic-ball node sits inside the Euclidean ball.
    for (uint32_t n : ball.node_set) {
        CHECK(distance(g.node(n), ball.center) < 0.3 + 1e-12);
    }
    // Nothing from strictly below the slit is reachable within 0.3.
    for (uint32_t n : ball.node_set) CHECK(g.node(n).y > -1.0 / 128);
}

TEST_CASE("metric axioms on sampled configurations") {
    auto L = shared("l_shape");
    VisibilityGraph vg(L);
    RandomStream rng(23);
    auto sample_point = [&]() {
        while (true) {
            Point p{rng.unit(), rng.unit()};
            if (L->contains(p)) return p;
        }
    };
    for (int k = 0; k < 60; ++k) {
        Point a = sample_point(), b = sample_point(), c = sample_point();
        double ab = vg.distance(a, b), bc = vg.distance(b, c), ac = vg.distance(a, c);
        CHECK(ab >= distance(a, b) - 1e-12);
        CHECK(ac <= ab + bc + 1e-9);
    }
    // Convex domain: equality with the Euclidean metric.
    auto sq = unit_square();
    VisibilityGraph vgs(sq);
    for (int k = 0; k < 40; ++k) {
        Point a{rng.unit(), rng.unit()}, b{rng.unit(), rng.unit()};
        if (!sq->contains(a) || !sq->contains(b)) continue;
        CHECK(vgs.distance(a, b) == doctest::Approx(distance(a, b)).epsilon(1e-9));
    }
}

TEST_CASE("grid path lengths sit within the metrication envelope") {
    auto L = shared("l_shape");
    VisibilityGraph vg(L);
    Grid g = Grid::discretize(L, 1.0 / 256);
    Sampler s;
    s.seed = 4;
    s.n_pairs = 40;
    for (auto [a, b] : sample_pairs(g, s)) {
        double exact = vg.distance(g.node(a), g.node(b));
        GeodesicResult r = weighted_geodesic(g, g.node(a), g.node(b), 1.0);
        CHECK(r.value >= exact - 1e-9);
        CHECK(r.value <= 1.09 * exact);
    }
}

TEST_CASE("curve integral is monotone in alpha where dist <= 1") {
    auto L = shared("l_shape");  // boundary distance is at most 1/2 here
    Grid g = Grid::discretize(L, 1.0 / 128);
    GeodesicResult r = weighted_geodesic(g, {0.25, 0.75}, {0.75, 0.25}, 0.5);
    REQUIRE(r.reachable());
    double v25 = curve_weighted_length(*L, r.curve, 0.25, g.spacing() / 2);
    double v75 = curve_weighted_length(*L, r.curve, 0.75, g.spacing() / 2);
    CHECK(v25 >= v75);  // dist^(alpha-1) is non-increasing in alpha when dist <= 1
}

TEST_CASE("similarity scales the alpha-integral by scale^alpha") {
    auto L = shared("l_shape");
    auto scaled = std::make_shared<PolygonalDomain>(L->similarity_transform(2.0, 0.0, {0, 0}));
    Grid g1 = Grid::discretize(L, 1.0 / 128);
    Grid g2 = Grid::discretize(scaled, 2.0 / 128);
    double alpha = 0.5;
    GeodesicResult r1 = weighted_geodesic(g1, {0.25, 0.75}, {0.75, 0.25}, alpha);
    GeodesicResult r2 = weighted_geodesic(g2, {0.5, 1.5}, {1.5, 0.5}, alpha);
    CHECK(r2.value == doctest::Approx(std::pow(2.0, alpha) * r1.value).epsilon(0.01));
}
