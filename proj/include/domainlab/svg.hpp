#ifndef DOMAINLAB_SVG_HPP
#define DOMAINLAB_SVG_HPP

#include <string>
#include <vector>

#include "domainlab/curve.hpp"
#include "domainlab/domain.hpp"
#include "domainlab/grid.hpp"
#include "domainlab/localization.hpp"
#include "domainlab/sweep.hpp"

namespace domainlab {

// Self-contained SVG writer: domain outline plus optional overlays. All
// floats use the shared CSV formatting so output is deterministic.
class SvgReport {
  public:
    explicit SvgReport(const PolygonalDomain& d, int pixels = 720);

    void add_curve(const Curve& c, const std::string& color, double width = 0.004);
    void add_circle(const Point& center, double radius, const std::string& color);
    void add_point(const Point& p, const std::string& color);
    void add_region(const Grid& g, const std::vector<char>& mask, const std::string& color);

    std::string str() const;

  private:
    double sx(double x) const;
    double sy(double y) const;

    std::string body_;
    Point lo_, hi_;
    int pixels_;
    double scale_;
};

std::string localization_svg(const Grid& g, const LocalizationResult& res);

// Heat map of per-cell best lower bounds (log color scale) over the domain.
std::string certificate_heatmap_svg(const PolygonalDomain& d, const CertificateTable& table);

}  // namespace domainlab

#endif
