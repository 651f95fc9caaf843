// domain-lab: planar domain analysis CLI.
//
// Commands: analyze, localize, sp, capacity, gallery, report. All outputs are
// deterministic for fixed inputs, seed, and spacing, independent of
// DOMAIN_LAB_THREADS.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "domainlab/capacity.hpp"
#include "domainlab/conditions.hpp"
#include "domainlab/csvio.hpp"
#include "domainlab/errors.hpp"
#include "domainlab/gallery.hpp"
#include "domainlab/localization.hpp"
#include "domainlab/svg.hpp"
#include "domainlab/sweep.hpp"

namespace fs = std::filesystem;
using namespace domainlab;

namespace {

// Spacing accepts plain decimals or rational syntax like 1/256.
double parse_spacing(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw config_error("spacing: division by zero in " + text);
    return num / den;
}

std::shared_ptr<const PolygonalDomain> load_shared(const std::string& path) {
    return std::make_shared<PolygonalDomain>(load_domain_file(path));
}

uint32_t deepest_node(const Grid& g) {
    size_t arg = 0;
    for (size_t i = 1; i < g.node_count(); ++i) {
        if (g.dist(i) > g.dist(arg)) arg = i;
    }
    return static_cast<uint32_t>(arg);
}

std::vector<Point> default_centers(const Grid& g) {
    std::vector<Point> centers;
    centers.push_back(g.node(deepest_node(g)));
    Point lo = g.domain().bbox_min(), hi = g.domain().bbox_max();
    Point mid{0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)};
    double ex = 0.25 * (hi.x - lo.x), ey = 0.25 * (hi.y - lo.y);
    for (Point cand : {Point{mid.x - ex, mid.y - ey}, Point{mid.x + ex, mid.y - ey},
                       Point{mid.x - ex, mid.y + ey}, Point{mid.x + ex, mid.y + ey}}) {
        // Snap to the deepest node in a window around the candidate.
        double best = -1.0;
        Point chosen = centers.front();
        for (uint32_t n : g.nodes_in_ball(cand, 0.2 * g.domain().diameter())) {
            if (g.dist(n) > best) {
                best = g.dist(n);
                chosen = g.node(n);
            }
        }
        if (best > 0.0) centers.push_back(chosen);
    }
    std::vector<Point> out;
    for (const Point& c : centers) {
        bool dup = false;
        for (const Point& o : out) dup = dup || (distance(c, o) < g.spacing());
        if (!dup) out.push_back(c);
    }
    return out;
}

std::vector<double> default_radii(const PolygonalDomain& d) {
    double diam = d.diameter();
    return {diam / 16.0, diam / 8.0, diam / 4.0, diam / 2.0};
}

void ensure_dir(const std::string& dir) {
    if (!dir.empty()) fs::create_directories(dir);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domain-lab: geometric condition constants and local "
                 "Sobolev-Poincare certificates on planar polygonal domains"};
    app.set_help_flag("--help", "print help");  // frees -h for the spacing option
    app.require_subcommand(1);

    std::string domain_path, h_text = "1/128", out_dir = "out", emit_dir;
    double p = 2.0, lambda = 2.0, alpha = 0.5, beta = 0.5, r = 0.25, eps0 = 0.5;
    std::vector<double> x0_coords;
    uint64_t seed = 0;
    bool sweep = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--h", h_text, "grid spacing, decimal or rational like 1/256");
        cmd->add_option("--seed", seed, "sampler seed");
        cmd->add_option("--out", out_dir, "output directory");
    };

    auto* analyze = app.add_subcommand("analyze", "estimate all condition constants");
    analyze->add_option("path", domain_path, "domain file")->required();
    analyze->add_option("--x0", x0_coords, "John/carrot center override")->expected(2);
    analyze->add_option("--alpha", alpha, "cigar exponent");
    analyze->add_option("--beta", beta, "cigar denominator exponent");
    add_common(analyze);

    auto* localize_cmd = app.add_subcommand("localize", "build and verify a John localization");
    localize_cmd->add_option("path", domain_path)->required();
    localize_cmd->add_option("--x0", x0_coords, "ball center")->expected(2);
    localize_cmd->add_option("--r", r, "ball radius");
    localize_cmd->add_option("--eps0", eps0, "asserted uniformity constant");
    add_common(localize_cmd);

    auto* sp = app.add_subcommand("sp", "local Sobolev-Poincare certificates");
    sp->add_option("path", domain_path)->required();
    sp->add_option("--p", p, "integrability exponent");
    sp->add_option("--lambda", lambda, "ball dilation factor");
    sp->add_flag("--sweep", sweep, "full center x radius sweep");
    sp->add_option("--x0", x0_coords, "single-cell center")->expected(2);
    sp->add_option("--r", r, "single-cell radius");
    add_common(sp);

    auto* cap = app.add_subcommand("capacity", "condenser p-capacity");
    cap->add_option("path", domain_path)->required();
    cap->add_option("--p", p, "capacity exponent");
    cap->add_option("--x0", x0_coords, "condenser center")->expected(2);
    cap->add_option("--r", r, "inner radius (outer = 4r)");
    add_common(cap);

    auto* gallery = app.add_subcommand("gallery", "emit a generated domain file");
    gallery->set_help_flag("--help", "print help");
    std::string gallery_name;
    double gw = 1.0 / 64.0, gs_param = 2.0, gturns = 2.5, gdecay = 0.7, gneck = 1.0 / 8.0,
           gaspect = 2.0;
    int gm = 64, gk = 3;
    gallery->add_option("name", gallery_name, "generator name or 'manifest'")->required();
    gallery->add_option("--emit", emit_dir, "directory to write the .dom file");
    gallery->add_option("--w", gw, "slit width");
    gallery->add_option("--m", gm, "polygon segment count");
    gallery->add_option("--aspect", gaspect, "rectangle aspect");
    gallery->add_option("--k", gk, "room count");
    gallery->add_option("--neck", gneck, "corridor width");
    gallery->add_option("--s", gs_param, "cusp exponent");
    gallery->add_option("--turns", gturns, "spiral turns");
    gallery->add_option("--decay", gdecay, "spiral gap decay");

    auto* report = app.add_subcommand("report", "render a certificate CSV as an SVG heat map");
    report->set_help_flag("--help", "print help");
    std::string certs_path;
    report->add_option("path", domain_path, "domain file")->required();
    report->add_option("--certs", certs_path, "certificate CSV produced by sp")->required();
    report->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gallery->parsed()) {
            std::string dir = emit_dir.empty() ? out_dir : emit_dir;
            ensure_dir(dir);
            if (gallery_name == "manifest") {
                write_text_file(dir + "/gallery_manifest.csv", gallery_manifest_csv());
                std::cout << dir << "/gallery_manifest.csv\n";
                return 0;
            }
            std::map<std::string, double> params{{"w", gw},          {"m", double(gm)},
                                                 {"aspect", gaspect}, {"k", double(gk)},
                                                 {"neck", gneck},    {"s", gs_param},
                                                 {"turns", gturns},  {"decay", gdecay}};
            GalleryEntry entry = make_gallery(gallery_name, params);
            std::string path = dir + "/" + gallery_name + ".dom";
            write_text_file(path, serialize_domain(entry.domain));
            std::cout << path << "\n";
            return 0;
        }

        double h = parse_spacing(h_text);

        if (analyze->parsed()) {
            auto dom = load_shared(domain_path);
            Grid g = Grid::discretize(dom, h);
            VisibilityGraph vg(dom);
            Sampler s;
            s.seed = seed;
            Point center =
                x0_coords.size() == 2 ? Point{x0_coords[0], x0_coords[1]} : g.node(deepest_node(g));

            std::vector<ConditionEstimate> ests;
            ests.push_back(quasiconvexity_constant(g, vg, s));
            ests.push_back(uniformity_estimate(g, vg, s));
            ests.push_back(john_estimate(g, vg, center, s));
            ests.push_back(cigar_constant(g, alpha, std::min(beta, alpha), s));
            ests.push_back(carrot_constant(g, 0.0, center, s));
            ests.push_back(ahlfors_constant(g, false, s));
            ests.push_back(ahlfors_constant(g, true, s));
            ensure_dir(out_dir);
            std::string stem = dom->name().empty() ? "domain" : dom->name();
            std::string path = out_dir + "/" + stem + "_conditions.csv";
            write_text_file(path, conditions_csv(ests, dom->name()));
            std::cout << path << "\n";
            return 0;
        }

        if (localize_cmd->parsed()) {
            auto dom = load_shared(domain_path);
            Grid g = Grid::discretize(dom, h);
            VisibilityGraph vg(dom);
            Point x0 = x0_coords.size() == 2 ? Point{x0_coords[0], x0_coords[1]}
                                             : g.node(deepest_node(g));
            Sampler s;
            s.seed = seed;
            LocalizationResult res = localize(g, vg, x0, r, eps0);
            res = verify_localization(g, res, x0, r, s);
            ensure_dir(out_dir);
            write_text_file(out_dir + "/localization.csv", localization_csv(res, dom->name()));
            write_text_file(out_dir + "/localization.svg", localization_svg(g, res));
            std::cout << out_dir << "/localization.csv\n" << out_dir << "/localization.svg\n";
            std::printf("lambda=%s c0=%s sandwich_ok=%s john_ok=%s\n", csv_num(res.lambda).c_str(),
                        csv_num(res.c0).c_str(), res.sandwich_ok ? "true" : "false",
                        res.john_ok ? "true" : "false");
            return 0;
        }

        if (sp->parsed()) {
            auto dom = load_shared(domain_path);
            Grid g = Grid::discretize(dom, h);
            std::vector<Point> centers;
            std::vector<double> radii;
            if (sweep) {
                centers = default_centers(g);
                radii = default_radii(*dom);
            } else {
                centers = {x0_coords.size() == 2 ? Point{x0_coords[0], x0_coords[1]}
                                                 : g.node(deepest_node(g))};
                radii = {r};
            }
            CertificateTable table = sp_sweep(g, p, centers, radii, lambda, seed);
            ensure_dir(out_dir);
            std::string path = out_dir + "/certificates.csv";
            write_text_file(path, certificates_csv(table));
            std::cout << path << "\n";
            std::printf("max_lower_bound=%s min_upper_estimate=%s\n",
                        csv_num(table.max_lower_bound()).c_str(),
                        csv_num(table.min_upper_estimate()).c_str());
            return 0;
        }

        if (cap->parsed()) {
            auto dom = load_shared(domain_path);
            Grid g = Grid::discretize(dom, h);
            Point c = x0_coords.size() == 2 ? Point{x0_coords[0], x0_coords[1]}
                                            : g.node(deepest_node(g));
            CapacityProblem prob;
            prob.p = p;
            for (size_t i = 0; i < g.node_count(); ++i) {
                double d = distance(g.node(i), c);
                if (d <= r) prob.U.push_back(static_cast<uint32_t>(i));
                if (d >= 4.0 * r) prob.V.push_back(static_cast<uint32_t>(i));
            }
            CapacityResult res = capacity(g, prob);
            ensure_dir(out_dir);
            std::string csv = "domain,p,x0_x,x0_y,inner_r,outer_r,value,h,seed,tool_version\n";
            csv += csv_escape(dom->name()) + "," + csv_num(p) + "," + csv_num(c.x) + "," +
                   csv_num(c.y) + "," + csv_num(r) + "," + csv_num(4.0 * r) + "," +
                   csv_num(res.value) + "," + csv_num(h) + "," + std::to_string(seed) + "," +
                   kToolVersion + "\n";
            write_text_file(out_dir + "/capacity.csv", csv);
            std::cout << out_dir << "/capacity.csv\n";
            std::printf("capacity=%s\n", csv_num(res.value).c_str());
            return 0;
        }

        if (report->parsed()) {
            auto dom = load_shared(domain_path);
            std::ifstream in(certs_path);
            if (!in) throw config_error("cannot open certificate file: " + certs_path);
            CertificateTable table;
            std::string line;
            std::getline(in, line);  // header
            while (std::getline(in, line)) {
                std::stringstream ss(line);
                std::string field;
                std::vector<std::string> fields;
                while (std::getline(ss, field, ',')) fields.push_back(field);
                if (fields.size() < 13) continue;
                Certificate c;
                c.domain = fields[0];
                c.p = std::stod(fields[1]);
                c.lambda = std::stod(fields[2]);
                c.x0 = {std::stod(fields[3]), std::stod(fields[4])};
                c.r = std::stod(fields[5]);
                c.side = fields[6];
                c.constant = fields[7] == "inf"   ? kInfinity
                             : fields[7] == "nan" ? std::nan("")
                                                  : std::stod(fields[7]);
                c.test_function_id = fields[8];
                table.rows.push_back(c);
            }
            ensure_dir(out_dir);
            write_text_file(out_dir + "/report.svg", certificate_heatmap_svg(*dom, table));
            std::cout << out_dir << "/report.svg\n";
            return 0;
        }
    } catch (const convergence_error& e) {
        std::cerr << "numeric non-convergence: " << e.what() << "\n";
        return 2;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
