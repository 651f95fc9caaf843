#include "domainlab/gallery.hpp"

#include <algorithm>
#include <cmath>

#include "domainlab/errors.hpp"

namespace domainlab {

namespace {

double param_or(const std::map<std::string, double>& params, const std::string& key,
                double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::map<std::string, std::string> base_meta(const std::string& cls, bool slice) {
    return {{"expected_class", cls}, {"slice", slice ? "true" : "false"}};
}

Ring regular_polygon(int m) {
    Ring r;
    r.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        double th = 2.0 * M_PI * k / m;
        r.push_back({std::cos(th), std::sin(th)});
    }
    return r;
}

// Unit disk (m-gon) with the x-axis chord removed except for a central
// passage: two collinear notches of thickness w enter from (1,0) and (-1,0)
// and stop at x = +-w/2. The passage of diameter w around the origin models
// the around-the-tip clearance of the degenerate slit.
Ring slit_disk_ring(double w, int m) {
    double half = 0.5 * w;
    Ring poly = regular_polygon(m);

    auto crossing = [&](double ylevel, bool positive_x) {
        // Intersection of the polygon with the horizontal line y = ylevel on
        // the requested side.
        size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& p = poly[i];
            const Point& q = poly[(i + 1) % n];
            if ((p.y - ylevel) * (q.y - ylevel) < 0.0) {
                double t = (ylevel - p.y) / (q.y - p.y);
                double x = p.x + t * (q.x - p.x);
                if ((x > 0.0) == positive_x) return Point{x, ylevel};
            }
        }
        throw config_error("slit_disk: no boundary crossing at the slit level");
    };

    Point A = crossing(half, true);    // circle, y=+w/2, x>0
    Point B = crossing(half, false);   // circle, y=+w/2, x<0
    Point C = crossing(-half, false);  // circle, y=-w/2, x<0
    Point D = crossing(-half, true);   // circle, y=-w/2, x>0

    Ring ring;
    ring.push_back(A);
    for (const Point& v : poly) {
        if (v.y > half) ring.push_back(v);  // upper arc, already ccw by angle
    }
    ring.push_back(B);
    ring.push_back({-half, half});
    ring.push_back({-half, -half});
    ring.push_back(C);
    for (const Point& v : poly) {
        if (v.y < -half) ring.push_back(v);  // lower arc continues ccw
    }
    ring.push_back(D);
    ring.push_back({half, -half});
    ring.push_back({half, half});
    return ring;
}

Ring rooms_ring(int k, double neck) {
    double clo = 0.5 - 0.5 * neck;
    double chi = 0.5 + 0.5 * neck;
    Ring r;
    r.push_back({0.0, 0.0});
    for (int i = 0; i < k; ++i) {
        double x1 = 1.5 * i + 1.0;
        r.push_back({x1, 0.0});
        if (i + 1 < k) {
            r.push_back({x1, clo});
            r.push_back({x1 + 0.5, clo});
            r.push_back({x1 + 0.5, 0.0});
        }
    }
    double xr = 1.5 * (k - 1) + 1.0;
    r.push_back({xr, 1.0});
    for (int i = k - 1; i >= 1; --i) {
        double xl = 1.5 * i;
        r.push_back({xl, 1.0});
        r.push_back({xl, chi});
        r.push_back({xl - 0.5, chi});
        r.push_back({xl - 0.5, 1.0});
    }
    r.push_back({0.0, 1.0});
    return r;
}

Ring power_cusp_ring(double s, int n_side) {
    Ring r;
    r.push_back({0.0, 0.0});
    for (int j = 1; j <= n_side; ++j) {
        double x = std::pow(static_cast<double>(j) / n_side, 2.0);
        r.push_back({x, -std::pow(x, s)});
    }
    for (int j = n_side; j >= 1; --j) {
        double x = std::pow(static_cast<double>(j) / n_side, 2.0);
        r.push_back({x, std::pow(x, s)});
    }
    return r;
}

Ring spiral_ring(double turns, double decay) {
    double g0 = 0.18;
    double theta_max = 2.0 * M_PI * turns;
    double drift = 1.2 * g0 / (2.0 * M_PI);
    double inner_end = 1.0 - drift * theta_max - g0;
    if (inner_end < 0.04)
        throw config_error("spiral: turns too large for the fixed gap profile");

    auto outer_radius = [&](double th) { return 1.0 - drift * th; };
    auto gap = [&](double th) { return g0 * std::pow(decay, th / (2.0 * M_PI)); };

    int nseg = static_cast<int>(std::ceil(28.0 * turns));
    Ring r;
    for (int i = 0; i <= nseg; ++i) {
        double th = theta_max * i / nseg;
        double rad = outer_radius(th);
        r.push_back({rad * std::cos(th), rad * std::sin(th)});
    }
    for (int i = nseg; i >= 0; --i) {
        double th = theta_max * i / nseg;
        double rad = outer_radius(th) - gap(th);
        r.push_back({rad * std::cos(th), rad * std::sin(th)});
    }
    if (ring_signed_area(r) < 0.0) std::reverse(r.begin(), r.end());
    return r;
}

}  // namespace

std::vector<std::string> gallery_names() {
    return {"disk",    "square",      "rectangle",          "slit_disk",
            "l_shape", "rooms_and_corridors", "power_cusp", "spiral"};
}

GalleryEntry make_gallery(const std::string& name, const std::map<std::string, double>& params) {
    ExpectedFlags f;
    std::map<std::string, double> used;

    if (name == "disk") {
        int m = static_cast<int>(param_or(params, "m", 64));
        if (m < 8 || m > 4096) throw config_error("disk: m out of range [8, 4096]");
        used["m"] = m;
        PolygonalDomain d(regular_polygon(m), {}, "disk", base_meta("uniform", true));
        return {std::move(d), f, used};
    }
    if (name == "square") {
        PolygonalDomain d({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}, "square",
                          base_meta("uniform", true));
        return {std::move(d), f, used};
    }
    if (name == "rectangle") {
        double aspect = param_or(params, "aspect", 2.0);
        if (!(aspect > 0.0 && aspect <= 64.0)) throw config_error("rectangle: aspect out of range");
        used["aspect"] = aspect;
        PolygonalDomain d({{0, 0}, {aspect, 0}, {aspect, 1}, {0, 1}}, {}, "rectangle",
                          base_meta("uniform", true));
        return {std::move(d), f, used};
    }
    if (name == "l_shape") {
        PolygonalDomain d({{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}}, {}, "l_shape",
                          base_meta("uniform", true));
        return {std::move(d), f, used};
    }
    if (name == "slit_disk") {
        double w = param_or(params, "w", 1.0 / 64.0);
        int m = static_cast<int>(param_or(params, "m", 64));
        if (!(w > 0.0 && w <= 0.25)) throw config_error("slit_disk: w out of range (0, 1/4]");
        if (m < 16 || m > 4096) throw config_error("slit_disk: m out of range [16, 4096]");
        used["w"] = w;
        used["m"] = m;
        f.uniform = false;
        f.john = true;  // each fixed-w polygon keeps a positive John constant
        f.cigar_alpha = -1.0;
        f.local_sp_p_lt_2 = f.local_sp_p_eq_2 = f.local_sp_p_gt_2 = false;
        PolygonalDomain d(slit_disk_ring(w, m), {}, "slit_disk", base_meta("john_not_uniform", true));
        return {std::move(d), f, used};
    }
    if (name == "rooms_and_corridors") {
        int k = static_cast<int>(param_or(params, "k", 3));
        double neck = param_or(params, "neck", 1.0 / 8.0);
        if (k < 2 || k > 16) throw config_error("rooms_and_corridors: k out of range [2, 16]");
        if (!(neck > 0.0 && neck < 1.0)) throw config_error("rooms_and_corridors: neck in (0,1)");
        used["k"] = k;
        used["neck"] = neck;
        // Wide necks keep the family uniform; the narrowing family is the
        // calibration knob, not a classification flip.
        PolygonalDomain d(rooms_ring(k, neck), {}, "rooms_and_corridors",
                          base_meta("uniform", true));
        return {std::move(d), f, used};
    }
    if (name == "power_cusp") {
        double s = param_or(params, "s", 2.0);
        if (!(s > 1.0 && s <= 4.0)) throw config_error("power_cusp: s out of range (1, 4]");
        used["s"] = s;
        f.uniform = false;
        f.john = false;
        f.cigar_alpha = -1.0;  // only (alpha, 1 - s(1-alpha))-cigar profiles
        f.local_sp_p_lt_2 = f.local_sp_p_eq_2 = f.local_sp_p_gt_2 = false;
        PolygonalDomain d(power_cusp_ring(s, 40), {}, "power_cusp", base_meta("cusp", true));
        return {std::move(d), f, used};
    }
    if (name == "spiral") {
        double turns = param_or(params, "turns", 2.5);
        double decay = param_or(params, "decay", 0.7);
        if (!(turns >= 1.0 && turns <= 3.5)) throw config_error("spiral: turns out of range [1, 3.5]");
        if (!(decay > 0.3 && decay <= 1.0)) throw config_error("spiral: decay out of range (0.3, 1]");
        used["turns"] = turns;
        used["decay"] = decay;
        f.uniform = false;
        f.john = false;
        f.cigar_alpha = -1.0;
        f.local_sp_p_lt_2 = f.local_sp_p_eq_2 = f.local_sp_p_gt_2 = false;
        PolygonalDomain d(spiral_ring(turns, decay), {}, "spiral", base_meta("spiral", true));
        return {std::move(d), f, used};
    }
    throw config_error("unknown gallery name: " + name);
}

std::string gallery_manifest_csv() {
    std::string out =
        "name,uniform,john,slice,cigar_alpha,local_sp_p_lt_2,local_sp_p_eq_2,local_sp_p_gt_2\n";
    for (const std::string& name : gallery_names()) {
        GalleryEntry e = make_gallery(name);
        auto b = [](bool v) { return v ? "yes" : "no"; };
        out += e.domain.name() + "," + b(e.expected.uniform) + "," + b(e.expected.john) + "," +
               b(e.expected.slice) + "," + std::to_string(e.expected.cigar_alpha) + "," +
               b(e.expected.local_sp_p_lt_2) + "," + b(e.expected.local_sp_p_eq_2) + "," +
               b(e.expected.local_sp_p_gt_2) + "\n";
    }
    return out;
}

}  // namespace domainlab
