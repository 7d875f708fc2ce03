#include "frosl/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace frosl {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string potential_to_csv(const Potential& q) {
  std::string out = "t,q\n";
  const double h = q.grid_step();
  const auto& s = q.samples();
  for (size_t i = 0; i < s.size(); ++i) {
    const double t = (i + 1 == s.size()) ? M_PI : double(i) * h;
    out += fmt_double(t);
    out += ',';
    out += fmt_double(s[i]);
    out += '\n';
  }
  return out;
}

Potential potential_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("potential CSV: empty input");
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("potential CSV: malformed row: " + line);
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  return Potential(std::move(values));
}

std::string values_to_csv(const std::vector<double>& t,
                          const std::vector<double>& v,
                          const std::string& value_header) {
  std::string out = "t," + value_header + "\n";
  for (size_t i = 0; i < t.size(); ++i) {
    out += fmt_double(t[i]);
    out += ',';
    out += fmt_double(v[i]);
    out += '\n';
  }
  return out;
}

std::string spectrum_to_json(const Spectrum& s) {
  json j;
  j["m_max"] = s.m_max;
  json eig = json::array();
  json rho = json::array();
  for (const auto& p : s.eigenvalues) {
    eig.push_back({{"re", p.lambda.real()}, {"im", p.lambda.imag()}});
    rho.push_back({{"re", p.rho.real()}, {"im", p.rho.imag()}});
  }
  j["eigenvalues"] = eig;
  j["rho"] = rho;
  return j.dump(2) + "\n";
}

Spectrum spectrum_from_json(const std::string& text) {
  const json j = json::parse(text);
  Spectrum s;
  s.m_max = j.value("m_max", 0);
  if (!j.contains("eigenvalues") || !j["eigenvalues"].is_array())
    throw std::runtime_error("spectrum JSON: 'eigenvalues' array required");
  for (const auto& e : j["eigenvalues"]) {
    const Complex lam(e.at("re").get<double>(),
                      e.contains("im") ? e.at("im").get<double>() : 0.0);
    s.eigenvalues.push_back(SpectralPoint::from_lambda(lam));
  }
  s.sort_and_index();
  if (s.m_max == 0) s.m_max = s.size();
  return s;
}

std::string sine_coefficients_to_json(const SineCoefficients& d) {
  json j;
  j["basis"] = "sin_m_pi_minus_t";
  j["d"] = d.d;
  return j.dump(2) + "\n";
}

SineCoefficients sine_coefficients_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.value("basis", "") != std::string("sin_m_pi_minus_t"))
    throw std::runtime_error("sine coefficients JSON: unexpected basis");
  SineCoefficients d;
  d.d = j.at("d").get<std::vector<double>>();
  return d;
}

std::string uniqueness_report_to_json(const UniquenessReport& rep) {
  json j;
  j["tau"] = rep.tau;
  j["pass"] = rep.pass;
  j["min_abs_G"] = rep.min_abs_G;
  j["worst_m"] = rep.worst_m;
  json values = json::array();
  for (const auto& e : rep.values)
    values.push_back({{"m", e.m}, {"G", e.G}});
  j["values"] = values;
  return j.dump(2) + "\n";
}

std::string per_mode_table_to_json(const ReconstructionResult& res) {
  json j;
  j["N_used"] = res.N_used;
  j["ill_posed_count"] = res.ill_posed_count;
  json rows = json::array();
  for (const auto& pm : res.per_mode)
    rows.push_back({{"m", pm.m},
                    {"delta_m2", pm.delta_at_m2},
                    {"G", pm.G},
                    {"d", pm.d},
                    {"ill_posed", pm.ill_posed},
                    {"conditioning_warning", pm.conditioning_warning}});
  j["per_mode"] = rows;
  return j.dump(2) + "\n";
}

std::string cross_validation_to_json(const CrossValidationReport& rep) {
  json j;
  j["max_shoot_residual"] = rep.max_shoot_residual;
  j["max_fd_sqrt_diff"] = rep.max_fd_sqrt_diff;
  j["fd_count_deficit"] = rep.fd_count_deficit;
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"m", r.m},
                    {"lambda_re", r.lambda.real()},
                    {"lambda_im", r.lambda.imag()},
                    {"rho_re", r.rho.real()},
                    {"rho_im", r.rho.imag()},
                    {"closed_residual", r.closed_residual},
                    {"shoot_residual", r.shoot_residual},
                    {"fd_matched", r.fd_matched},
                    {"fd_sqrt_diff", r.fd_sqrt_diff}});
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace frosl
