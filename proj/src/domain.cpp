#include "domainlab/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "domainlab/errors.hpp"

namespace domainlab {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool ring_strictly_inside(const Ring& inner, const Ring& outer) {
    for (const Point& p : inner) {
        if (!point_in_ring(outer, p, false)) return false;
    }
    size_t n = inner.size(), m = outer.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (segments_intersect(inner[i], inner[(i + 1) % n], outer[j], outer[(j + 1) % m]))
                return false;
        }
    }
    return true;
}

bool rings_disjoint(const Ring& r1, const Ring& r2) {
    size_t n = r1.size(), m = r2.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (segments_intersect(r1[i], r1[(i + 1) % n], r2[j], r2[(j + 1) % m])) return false;
        }
    }
    if (point_in_ring(r2, r1[0], true)) return false;
    if (point_in_ring(r1, r2[0], true)) return false;
    return true;
}

}  // namespace

PolygonalDomain::PolygonalDomain(Ring outer, std::vector<Ring> holes, std::string name,
                                 std::map<std::string, std::string> metadata)
    : outer_(std::move(outer)),
      holes_(std::move(holes)),
      name_(std::move(name)),
      metadata_(std::move(metadata)) {
    validate();

    auto add_ring_segments = [&](const Ring& r) {
        size_t n = r.size();
        for (size_t i = 0; i < n; ++i) boundary_.push_back({r[i], r[(i + 1) % n]});
    };
    add_ring_segments(outer_);
    for (const Ring& h : holes_) add_ring_segments(h);

    std::vector<Point> all_vertices = outer_;
    for (const Ring& h : holes_) all_vertices.insert(all_vertices.end(), h.begin(), h.end());
    for (size_t i = 0; i < all_vertices.size(); ++i) {
        for (size_t j = i + 1; j < all_vertices.size(); ++j) {
            diameter_ = std::max(diameter_, distance(all_vertices[i], all_vertices[j]));
        }
    }

    area_ = std::abs(ring_signed_area(outer_));
    for (const Ring& h : holes_) area_ -= std::abs(ring_signed_area(h));

    bbox_min_ = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    bbox_max_ = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const Point& p : outer_) {
        bbox_min_.x = std::min(bbox_min_.x, p.x);
        bbox_min_.y = std::min(bbox_min_.y, p.y);
        bbox_max_.x = std::max(bbox_max_.x, p.x);
        bbox_max_.y = std::max(bbox_max_.y, p.y);
    }
}

void PolygonalDomain::validate() const {
    if (outer_.size() < 3) throw config_error("outer ring needs at least 3 vertices");
    if (!ring_is_simple(outer_)) throw config_error("outer ring is self-intersecting");
    if (ring_signed_area(outer_) <= 0.0)
        throw config_error("outer ring must be counterclockwise");
    for (size_t k = 0; k < holes_.size(); ++k) {
        const Ring& h = holes_[k];
        std::string tag = "hole " + std::to_string(k);
        if (h.size() < 3) throw config_error(tag + ": needs at least 3 vertices");
        if (!ring_is_simple(h)) throw config_error(tag + ": self-intersecting");
        if (ring_signed_area(h) >= 0.0) throw config_error(tag + ": hole orientation must be clockwise");
        if (!ring_strictly_inside(h, outer_))
            throw config_error(tag + ": not strictly inside the outer ring");
        for (size_t j = 0; j < k; ++j) {
            if (!rings_disjoint(h, holes_[j]))
                throw config_error(tag + ": intersects hole " + std::to_string(j));
        }
    }
    // With disjoint holes strictly inside a simple outer ring the open region
    // is connected, so no separate connectivity check is needed.
}

bool PolygonalDomain::contains(const Point& p) const {
    if (p.x <= bbox_min_.x || p.x >= bbox_max_.x || p.y <= bbox_min_.y || p.y >= bbox_max_.y)
        return false;
    if (point_on_ring(outer_, p)) return false;
    for (const Ring& h : holes_) {
        if (point_on_ring(h, p)) return false;
    }
    if (!point_in_ring(outer_, p, false)) return false;
    for (const Ring& h : holes_) {
        if (point_in_ring(h, p, true)) return false;
    }
    return true;
}

bool PolygonalDomain::contains_closed(const Point& p) const {
    if (point_on_ring(outer_, p)) return true;
    for (const Ring& h : holes_) {
        if (point_on_ring(h, p)) return true;
    }
    if (!point_in_ring(outer_, p, true)) return false;
    for (const Ring& h : holes_) {
        if (point_in_ring(h, p, false)) return false;
    }
    return true;
}

double PolygonalDomain::distance_to_boundary_unchecked(const Point& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& s : boundary_) {
        best = std::min(best, point_segment_distance(p, s.a, s.b));
    }
    return best;
}

double PolygonalDomain::boundary_distance(const Point& p) const {
    if (!contains(p))
        throw config_error("boundary_distance: point (" + format_double(p.x) + ", " +
                           format_double(p.y) + ") is not inside the domain");
    return distance_to_boundary_unchecked(p);
}

bool PolygonalDomain::segment_inside(const Point& a, const Point& b) const {
    if (!contains(a) || !contains(b)) return false;
    for (const Segment& s : boundary_) {
        if (segments_intersect(a, b, s.a, s.b)) return false;
    }
    return true;
}

bool PolygonalDomain::segment_in_closure(const Point& a, const Point& b) const {
    if (!contains_closed(a) || !contains_closed(b)) return false;
    std::vector<double> params;
    for (const Segment& s : boundary_) {
        if (segments_cross_properly(a, b, s.a, s.b)) return false;
        segment_contact_params(a, b, s.a, s.b, params);
    }
    params.push_back(0.0);
    params.push_back(1.0);
    std::sort(params.begin(), params.end());
    Point ab = b - a;
    for (size_t i = 0; i + 1 < params.size(); ++i) {
        double t0 = params[i], t1 = params[i + 1];
        if (t1 - t0 < 1e-14) continue;
        double tm = 0.5 * (t0 + t1);
        Point mid{a.x + tm * ab.x, a.y + tm * ab.y};
        if (!contains_closed(mid)) return false;
    }
    return true;
}

PolygonalDomain PolygonalDomain::similarity_transform(double scale, double rotation,
                                                      Point shift) const {
    if (scale <= 0.0) throw config_error("similarity_transform: scale must be positive");
    double c = std::cos(rotation), s = std::sin(rotation);
    auto map_point = [&](const Point& p) {
        return Point{shift.x + scale * (c * p.x - s * p.y), shift.y + scale * (s * p.x + c * p.y)};
    };
    auto map_ring = [&](const Ring& r) {
        Ring out;
        out.reserve(r.size());
        for (const Point& p : r) out.push_back(map_point(p));
        return out;
    };
    std::vector<Ring> new_holes;
    new_holes.reserve(holes_.size());
    for (const Ring& h : holes_) new_holes.push_back(map_ring(h));
    return PolygonalDomain(map_ring(outer_), std::move(new_holes), name_, metadata_);
}

namespace {

Ring parse_ring(const std::string& body, int line_no) {
    Ring ring;
    std::stringstream ss(body);
    std::string chunk;
    int col = 0;
    while (std::getline(ss, chunk, ';')) {
        ++col;
        std::stringstream cs(chunk);
        double x, y;
        if (!(cs >> x >> y)) {
            // Allow a trailing empty chunk after the final ';'.
            std::string rest;
            cs.clear();
            cs.seekg(0);
            cs >> rest;
            if (rest.empty()) continue;
            throw config_error("parse error at line " + std::to_string(line_no) + ", vertex " +
                               std::to_string(col) + ": expected 'x y'");
        }
        std::string extra;
        if (cs >> extra)
            throw config_error("parse error at line " + std::to_string(line_no) + ", vertex " +
                               std::to_string(col) + ": trailing token '" + extra + "'");
        ring.push_back({x, y});
    }
    return ring;
}

}  // namespace

PolygonalDomain parse_domain(const std::string& text) {
    std::optional<Ring> outer;
    std::vector<Ring> holes;
    std::string name;
    std::map<std::string, std::string> metadata;

    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw config_error("parse error at line " + std::to_string(line_no) +
                               ": expected 'key: ...'");
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string body = line.substr(colon + 1);
        if (key == "outer") {
            if (outer) throw config_error("parse error at line " + std::to_string(line_no) +
                                          ": duplicate outer ring");
            outer = parse_ring(body, line_no);
        } else if (key == "hole") {
            holes.push_back(parse_ring(body, line_no));
        } else if (key == "meta") {
            auto eq = body.find('=');
            if (eq == std::string::npos)
                throw config_error("parse error at line " + std::to_string(line_no) +
                                   ": meta needs key=value");
            std::string mkey = body.substr(0, eq);
            std::string mval = body.substr(eq + 1);
            auto trim = [](std::string& s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
            };
            trim(mkey);
            trim(mval);
            if (mkey == "name") {
                name = mval;
            } else {
                metadata[mkey] = mval;
            }
        } else {
            throw config_error("parse error at line " + std::to_string(line_no) +
                               ": unknown key '" + key + "'");
        }
    }
    if (!outer) throw config_error("domain file has no outer ring");
    return PolygonalDomain(std::move(*outer), std::move(holes), std::move(name),
                           std::move(metadata));
}

std::string serialize_domain(const PolygonalDomain& d) {
    std::string out;
    auto emit_ring = [&](const char* key, const Ring& r) {
        out += key;
        out += ":";
        for (size_t i = 0; i < r.size(); ++i) {
            out += (i == 0) ? " " : "; ";
            out += format_double(r[i].x);
            out += " ";
            out += format_double(r[i].y);
        }
        out += "\n";
    };
    emit_ring("outer", d.outer());
    for (const Ring& h : d.holes()) emit_ring("hole", h);
    if (!d.name().empty()) out += "meta: name=" + d.name() + "\n";
    for (const auto& [k, v] : d.metadata()) out += "meta: " + k + "=" + v + "\n";
    return out;
}

PolygonalDomain load_domain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open domain file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_domain(buf.str());
}

}  // namespace domainlab
