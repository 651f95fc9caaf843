#include "domainlab/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "domainlab/errors.hpp"

namespace domainlab {

std::string csv_num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    bool needs_quote = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string conditions_csv(const std::vector<ConditionEstimate>& estimates,
                           const std::string& domain_name) {
    std::string out =
        "domain,kind,constant,sidedness,alpha,beta,witness,h,seed,tool_version,params\n";
    for (const ConditionEstimate& e : estimates) {
        std::string witness;
        for (size_t i = 0; i < e.witness_points.size(); ++i) {
            if (i) witness += " ";
            witness += csv_num(e.witness_points[i].x) + " " + csv_num(e.witness_points[i].y);
        }
        for (double v : e.witness_values) witness += " r=" + csv_num(v);
        out += csv_escape(domain_name) + "," + to_string(e.kind) + "," + csv_num(e.constant) +
               "," + to_string(e.sidedness) + "," + csv_num(e.alpha) + "," + csv_num(e.beta) +
               "," + csv_escape(witness) + "," + csv_num(e.h) + "," + std::to_string(e.seed) +
               "," + kToolVersion + "," + csv_escape(e.params) + "\n";
    }
    return out;
}

std::string certificates_csv(const CertificateTable& table) {
    std::string out =
        "domain,p,lambda,x0_x,x0_y,r,side,constant,test_function_id,h,seed,tool_version,note\n";
    for (const Certificate& c : table.rows) {
        out += csv_escape(c.domain) + "," + csv_num(c.p) + "," + csv_num(c.lambda) + "," +
               csv_num(c.x0.x) + "," + csv_num(c.x0.y) + "," + csv_num(c.r) + "," + c.side + "," +
               csv_num(c.constant) + "," + csv_escape(c.test_function_id) + "," + csv_num(c.h) +
               "," + std::to_string(c.seed) + "," + kToolVersion + "," + csv_escape(c.note) + "\n";
    }
    return out;
}

std::string localization_csv(const LocalizationResult& res, const std::string& domain_name) {
    std::string out =
        "domain,x0_x,x0_y,r,eps0,lambda,c0,z0_x,z0_y,whole_domain,sandwich_ok,john_ok,"
        "john_constant,region_nodes,winning_alphas,tool_version\n";
    size_t count = 0;
    for (char c : res.region) count += (c != 0);
    out += csv_escape(domain_name) + "," + csv_num(res.x0.x) + "," + csv_num(res.x0.y) + "," +
           csv_num(res.r) + "," + csv_num(res.eps0) + "," + csv_num(res.lambda) + "," +
           csv_num(res.c0) + "," + csv_num(res.z0.x) + "," + csv_num(res.z0.y) + "," +
           (res.whole_domain ? "true" : "false") + "," + (res.sandwich_ok ? "true" : "false") +
           "," + (res.john_ok ? "true" : "false") + "," + csv_num(res.john_constant) + "," +
           std::to_string(count) + "," + csv_escape(res.winning_alphas) + "," + kToolVersion +
           "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write file: " + path);
    out << content;
}

}  // namespace domainlab
