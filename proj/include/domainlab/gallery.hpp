#ifndef DOMAINLAB_GALLERY_HPP
#define DOMAINLAB_GALLERY_HPP

#include <map>
#include <string>
#include <vector>

#include "domainlab/domain.hpp"

namespace domainlab {

// Family-level expectations for a generated domain, as the generator
// parameter degrades (slit width, neck width, turns, ...).
struct ExpectedFlags {
    bool uniform = true;
    bool john = true;
    bool slice = true;
    // Smallest alpha for which the (alpha, alpha)-cigar condition is
    // expected to hold; 0 means all alphas (uniform-grade), -1 means none.
    double cigar_alpha = 0.0;
    bool local_sp_p_lt_2 = true;
    bool local_sp_p_eq_2 = true;
    bool local_sp_p_gt_2 = true;
};

struct GalleryEntry {
    PolygonalDomain domain;
    ExpectedFlags expected;
    std::map<std::string, double> params;
};

// Generators: disk(m), square, rectangle(aspect), slit_disk(w, m), l_shape,
// rooms_and_corridors(k, neck), power_cusp(s), spiral(turns, decay).
// Unspecified parameters take the documented defaults. Throws config_error
// for unknown names or out-of-range parameters.
GalleryEntry make_gallery(const std::string& name,
                          const std::map<std::string, double>& params = {});

std::vector<std::string> gallery_names();

// One CSV line of expected flags per entry (see csvio for the header).
std::string gallery_manifest_csv();

}  // namespace domainlab

#endif
