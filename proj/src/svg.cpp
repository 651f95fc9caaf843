#include "domainlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "domainlab/csvio.hpp"

namespace domainlab {

SvgReport::SvgReport(const PolygonalDomain& d, int pixels) : pixels_(pixels) {
    lo_ = d.bbox_min();
    hi_ = d.bbox_max();
    double margin = 0.04 * std::max(hi_.x - lo_.x, hi_.y - lo_.y);
    lo_.x -= margin;
    lo_.y -= margin;
    hi_.x += margin;
    hi_.y += margin;
    scale_ = pixels_ / std::max(hi_.x - lo_.x, hi_.y - lo_.y);

    auto ring_path = [&](const Ring& r) {
        std::string p;
        for (size_t i = 0; i < r.size(); ++i) {
            p += (i == 0 ? "M" : "L");
            p += csv_num(sx(r[i].x)) + " " + csv_num(sy(r[i].y)) + " ";
        }
        p += "Z";
        return p;
    };
    std::string path = ring_path(d.outer());
    for (const Ring& h : d.holes()) path += " " + ring_path(h);
    body_ += "<path d=\"" + path +
             "\" fill=\"#f2f2ef\" stroke=\"#333333\" stroke-width=\"1.5\" fill-rule=\"evenodd\"/>\n";
}

double SvgReport::sx(double x) const { return (x - lo_.x) * scale_; }
double SvgReport::sy(double y) const { return (hi_.y - y) * scale_; }

void SvgReport::add_curve(const Curve& c, const std::string& color, double width) {
    if (c.size() < 2) return;
    std::string pts;
    for (const Point& p : c.vertices()) pts += csv_num(sx(p.x)) + "," + csv_num(sy(p.y)) + " ";
    body_ += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"" + csv_num(width * scale_) + "\"/>\n";
}

void SvgReport::add_circle(const Point& center, double radius, const std::string& color) {
    body_ += "<circle cx=\"" + csv_num(sx(center.x)) + "\" cy=\"" + csv_num(sy(center.y)) +
             "\" r=\"" + csv_num(radius * scale_) + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.2\"/>\n";
}

void SvgReport::add_point(const Point& p, const std::string& color) {
    body_ += "<circle cx=\"" + csv_num(sx(p.x)) + "\" cy=\"" + csv_num(sy(p.y)) +
             "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
}

void SvgReport::add_region(const Grid& g, const std::vector<char>& mask,
                           const std::string& color) {
    double h = g.spacing();
    for (size_t i = 0; i < g.node_count(); ++i) {
        if (!mask[i]) continue;
        const Point& c = g.node(i);
        body_ += "<rect x=\"" + csv_num(sx(c.x - 0.5 * h)) + "\" y=\"" + csv_num(sy(c.y + 0.5 * h)) +
                 "\" width=\"" + csv_num(h * scale_) + "\" height=\"" + csv_num(h * scale_) +
                 "\" fill=\"" + color + "\" fill-opacity=\"0.45\"/>\n";
    }
}

std::string SvgReport::str() const {
    double w = (hi_.x - lo_.x) * scale_;
    double h = (hi_.y - lo_.y) * scale_;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + csv_num(w) + "\" height=\"" +
           csv_num(h) + "\" viewBox=\"0 0 " + csv_num(w) + " " + csv_num(h) + "\">\n" + body_ +
           "</svg>\n";
}

std::string localization_svg(const Grid& g, const LocalizationResult& res) {
    SvgReport svg(g.domain());
    svg.add_region(g, res.region, "#7fb2d9");
    svg.add_circle(res.x0, res.r, "#2b6cb0");
    svg.add_circle(res.x0, res.lambda * res.r, "#b03030");
    svg.add_point(res.z0, "#d97f27");
    for (const Point& w : res.witnesses) svg.add_point(w, "#c02040");
    return svg.str();
}

std::string certificate_heatmap_svg(const PolygonalDomain& d, const CertificateTable& table) {
    SvgReport svg(d);
    struct CellAgg {
        Point x0;
        double r;
        double best = -1.0;
    };
    std::map<std::pair<std::pair<double, double>, double>, CellAgg> cells;
    double vmax = 1e-12;
    for (const Certificate& c : table.rows) {
        if (c.side != "lower_bound" || !std::isfinite(c.constant)) continue;
        auto key = std::make_pair(std::make_pair(c.x0.x, c.x0.y), c.r);
        auto& agg = cells[key];
        agg.x0 = c.x0;
        agg.r = c.r;
        agg.best = std::max(agg.best, c.constant);
        vmax = std::max(vmax, c.constant);
    }
    for (const auto& [key, agg] : cells) {
        if (agg.best < 0.0) continue;
        double t = std::log1p(agg.best) / std::log1p(vmax);
        int red = static_cast<int>(40 + 215 * t);
        int blue = static_cast<int>(215 - 175 * t);
        char color[16];
        std::snprintf(color, sizeof(color), "#%02x30%02x", red, blue);
        svg.add_circle(agg.x0, agg.r, color);
        svg.add_point(agg.x0, color);
    }
    return svg.str();
}

}  // namespace domainlab
