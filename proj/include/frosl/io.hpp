#pragma once

#include <iosfwd>
#include <string>

#include "frosl/inverse.hpp"
#include "frosl/oracle.hpp"
#include "frosl/potential.hpp"
#include "frosl/types.hpp"

namespace frosl {

// Full-precision decimal (17 significant digits), locale-independent.
std::string fmt_double(double v);

// Potential CSV: header "t,q", one row per grid point, LF endings.
std::string potential_to_csv(const Potential& q);
Potential potential_from_csv(std::istream& in);
std::string values_to_csv(const std::vector<double>& t,
                          const std::vector<double>& v,
                          const std::string& value_header);

// Spectrum JSON: {"eigenvalues":[{"re":..,"im":..}],
//                 "rho":[{"re":..,"im":..}], "m_max":..}
std::string spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

// SineCoefficients JSON: {"basis":"sin_m_pi_minus_t","d":[...]}
std::string sine_coefficients_to_json(const SineCoefficients& d);
SineCoefficients sine_coefficients_from_json(const std::string& text);

std::string uniqueness_report_to_json(const UniquenessReport& rep);
std::string per_mode_table_to_json(const ReconstructionResult& res);
std::string cross_validation_to_json(const CrossValidationReport& rep);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace frosl
