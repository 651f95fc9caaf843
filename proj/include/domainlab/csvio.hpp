#ifndef DOMAINLAB_CSVIO_HPP
#define DOMAINLAB_CSVIO_HPP

#include <string>
#include <vector>

#include "domainlab/conditions.hpp"
#include "domainlab/localization.hpp"
#include "domainlab/sweep.hpp"

namespace domainlab {

inline constexpr const char* kToolVersion = "domain-lab-0.1.0";

// Fixed float formatting shared by every emitter so identical runs produce
// byte-identical files.
std::string csv_num(double v);
std::string csv_escape(const std::string& s);

std::string conditions_csv(const std::vector<ConditionEstimate>& estimates,
                           const std::string& domain_name);

std::string certificates_csv(const CertificateTable& table);

std::string localization_csv(const LocalizationResult& res, const std::string& domain_name);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace domainlab

#endif
