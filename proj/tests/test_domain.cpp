#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <memory>

#include "domainlab/domain.hpp"
#include "domainlab/errors.hpp"
#include "domainlab/gallery.hpp"
#include "domainlab/grid.hpp"
#include "domainlab/sampler.hpp"

using namespace domainlab;

namespace {

std::shared_ptr<PolygonalDomain> square() {
    return std::make_shared<PolygonalDomain>(parse_domain("outer: 0 0; 1 0; 1 1; 0 1"));
}

// Independent point-in-polygon oracle: winding number by signed angle sum.
// Deliberately a different algorithm from the library's crossing test.
bool winding_inside(const Ring& ring, const Point& p) {
    double total = 0.0;
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        Point a = ring[i] - p;
        Point b = ring[(i + 1) % n] - p;
        total += std::atan2(cross(a, b), dot(a, b));
    }
    return std::abs(total) > M_PI;  // ~2*pi inside, ~0 outside
}

}  // namespace

TEST_CASE("parse unit square") {
    auto d = parse_domain("outer: 0 0; 1 0; 1 1; 0 1");
    CHECK(d.outer().size() == 4);
    CHECK(d.holes().empty());
    CHECK(d.diameter() == doctest::Approx(std::sqrt(2.0)));
    CHECK(d.area() == doctest::Approx(1.0));
}

TEST_CASE("parse 64-gon disk") {
    GalleryEntry disk = make_gallery("disk", {{"m", 64}});
    CHECK(disk.domain.outer().size() == 64);
    CHECK(disk.domain.diameter() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hole orientation is rejected") {
    // Counterclockwise hole ring must be refused.
    std::string text =
        "outer: 0 0; 1 0; 1 1; 0 1\n"
        "hole: 0.4 0.4; 0.6 0.4; 0.6 0.6; 0.4 0.6\n";
    CHECK_THROWS_WITH_AS(parse_domain(text), doctest::Contains("hole orientation"), config_error);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_domain("outer: 0 0; 1 zebra; 1 1"), doctest::Contains("line 1"),
                         config_error);
    CHECK_THROWS_AS(parse_domain("outer: 0 0; 1 0"), config_error);     // 2 vertices
    CHECK_THROWS_AS(parse_domain("# comment only\n"), config_error);    // no outer
}

TEST_CASE("self-intersecting outer ring is rejected") {
    CHECK_THROWS_AS(parse_domain("outer: 0 0; 1 1; 1 0; 0 1"), config_error);
}

TEST_CASE("contains: strict interior") {
    auto d = square();
    CHECK(d->contains({0.5, 0.5}));
    CHECK_FALSE(d->contains({0.5, 0.0}));  // boundary excluded
    CHECK_FALSE(d->contains({1.5, 0.5}));
    CHECK(d->contains_closed({0.5, 0.0}));
}

TEST_CASE("contains agrees with the winding-number oracle on the slit disk") {
    GalleryEntry slit = make_gallery("slit_disk", {{"w", 0.01}, {"m", 64}});
    const Ring& ring = slit.domain.outer();
    CHECK_FALSE(slit.domain.contains({0.5, 0.0}));  // inside the slit material

    RandomStream rng(7);
    int checked = 0;
    for (int k = 0; k < 4000; ++k) {
        Point p{2.0 * rng.unit() - 1.0, 2.0 * rng.unit() - 1.0};
        // Skip points within a hair of the boundary where the inexact oracle
        // is unreliable.
        bool near_boundary = slit.domain.distance_to_boundary_unchecked(p) < 1e-4;
        if (near_boundary) continue;
        CHECK(slit.domain.contains(p) == winding_inside(ring, p));
        ++checked;
    }
    CHECK(checked > 3000);
}

TEST_CASE("boundary_distance on the square") {
    auto d = square();
    CHECK(d->boundary_distance({0.5, 0.5}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d->boundary_distance({0.25, 0.5}) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS_AS(d->boundary_distance({2.0, 0.5}), config_error);
}

TEST_CASE("boundary_distance at the disk center equals the apothem") {
    GalleryEntry disk = make_gallery("disk", {{"m", 64}});
    double apothem = std::cos(M_PI / 64.0);  // closed form for a regular 64-gon
    CHECK(disk.domain.boundary_distance({0.0, 0.0}) == doctest::Approx(apothem).epsilon(1e-12));
    CHECK(apothem == doctest::Approx(0.99880).epsilon(1e-4));
}

TEST_CASE("similarity transforms") {
    auto d = square();
    auto scaled = d->similarity_transform(2.0, 0.0, {0, 0});
    CHECK(scaled.diameter() == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(scaled.area() == doctest::Approx(4.0));

    auto rotated = d->similarity_transform(1.0, M_PI / 2.0, {0, 0});
    CHECK(rotated.diameter() == doctest::Approx(d->diameter()));
    CHECK(rotated.area() == doctest::Approx(1.0));

    GalleryEntry disk = make_gallery("disk");
    auto big = disk.domain.similarity_transform(3.0, 0.0, {0, 0});
    CHECK(big.diameter() == doctest::Approx(3.0 * disk.domain.diameter()));

    // Metadata rides along.
    CHECK(scaled.metadata() == d->metadata());
}

TEST_CASE("discretize unit square at h=1/4") {
    Grid g = Grid::discretize(square(), 0.25);
    CHECK(g.node_count() == 16);  // direct enumeration: 4x4 cell centers
    CHECK(g.component_count() == 1);
    // Corner node has exactly 3 in-domain 8-neighbors.
    uint32_t corner = g.snap({0.125, 0.125});
    CHECK(g.neighbors(corner).size() == 3);
    // Interior node has all 8.
    uint32_t inner = g.snap({0.375, 0.375});
    CHECK(g.neighbors(inner).size() == 8);
    for (size_t i = 0; i < g.node_count(); ++i) CHECK(g.dist(i) > 0.0);
}

TEST_CASE("discretize: slit sides are non-adjacent") {
    GalleryEntry slit = make_gallery("slit_disk", {{"w", 0.02}, {"m", 64}});
    Grid g = Grid::discretize(std::make_shared<PolygonalDomain>(slit.domain), 1.0 / 128);
    // Nodes right above and below the slit at x = 0.5.
    uint32_t above = g.snap({0.5, 0.02});
    uint32_t below = g.snap({0.5, -0.02});
    CHECK(g.node(above).y > 0.01);
    CHECK(g.node(below).y < -0.01);
    bool adjacent = false;
    for (const Grid::Edge& e : g.neighbors(above)) adjacent = adjacent || (e.to == below);
    CHECK_FALSE(adjacent);
    // Independent oracle: the straight segment between them leaves the domain.
    CHECK_FALSE(slit.domain.segment_inside(g.node(above), g.node(below)));
}

TEST_CASE("discretize rejects grids that are too coarse") {
    CHECK_THROWS_WITH_AS(Grid::discretize(square(), 1.0), doctest::Contains("coarse"),
                         config_error);
}

TEST_CASE("boundary distance is 1-Lipschitz along segments") {
    GalleryEntry L = make_gallery("l_shape");
    RandomStream rng(3);
    int done = 0;
    while (done < 200) {
        Point a{rng.unit(), rng.unit()};
        Point b{rng.unit(), rng.unit()};
        if (!L.domain.contains(a) || !L.domain.contains(b)) continue;
        if (!L.domain.segment_inside(a, b)) continue;
        double da = L.domain.boundary_distance(a);
        double db = L.domain.boundary_distance(b);
        CHECK(std::abs(da - db) <= distance(a, b) + 1e-12);
        ++done;
    }
}

TEST_CASE("boundary distance is midpoint-concave on convex domains") {
    auto d = square();
    RandomStream rng(5);
    for (int k = 0; k < 200; ++k) {
        Point a{rng.unit(), rng.unit()};
        Point b{rng.unit(), rng.unit()};
        if (!d->contains(a) || !d->contains(b)) continue;
        Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
        double dm = d->boundary_distance(mid);
        CHECK(dm >= std::min(d->boundary_distance(a), d->boundary_distance(b)) - 1e-12);
    }
}

TEST_CASE("refinement never increases the component count") {
    GalleryEntry slit = make_gallery("slit_disk", {{"w", 1.0 / 64}, {"m", 64}});
    auto dom = std::make_shared<PolygonalDomain>(slit.domain);
    int prev = -1;
    for (double h : {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128}) {
        Grid g = Grid::discretize(dom, h);
        if (prev >= 0) CHECK(g.component_count() <= prev);
        prev = g.component_count();
    }
    CHECK(prev == 1);  // fully resolved below the gallery threshold
}

TEST_CASE("similarity scales boundary distances exactly") {
    GalleryEntry L = make_gallery("l_shape");
    auto scaled = L.domain.similarity_transform(2.0, 0.0, {0, 0});
    RandomStream rng(11);
    for (int k = 0; k < 100; ++k) {
        Point p{rng.unit(), rng.unit()};
        if (!L.domain.contains(p)) continue;
        double d1 = L.domain.boundary_distance(p);
        double d2 = scaled.boundary_distance({2.0 * p.x, 2.0 * p.y});
        CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-14));
    }
}

TEST_CASE("serialize round-trips bit-exactly") {
    for (const std::string& name : gallery_names()) {
        GalleryEntry e = make_gallery(name);
        std::string text = serialize_domain(e.domain);
        PolygonalDomain again = parse_domain(text);
        REQUIRE(again.outer().size() == e.domain.outer().size());
        for (size_t i = 0; i < again.outer().size(); ++i) {
            CHECK(std::memcmp(&again.outer()[i].x, &e.domain.outer()[i].x, sizeof(double)) == 0);
            CHECK(std::memcmp(&again.outer()[i].y, &e.domain.outer()[i].y, sizeof(double)) == 0);
        }
        CHECK(serialize_domain(again) == text);
    }
}
