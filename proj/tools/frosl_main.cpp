// frosl: forward and inverse spectral computations for the Dirichlet
// Sturm-Liouville operator with frozen arguments.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frosl/charfn.hpp"
#include "frosl/errors.hpp"
#include "frosl/fourier.hpp"
#include "frosl/inverse.hpp"
#include "frosl/io.hpp"
#include "frosl/kernels.hpp"
#include "frosl/oracle.hpp"
#include "frosl/parse.hpp"
#include "frosl/potential.hpp"
#include "frosl/spectrum.hpp"

namespace {

using namespace frosl;

constexpr int kExitConfig = 2;
constexpr int kExitCountMismatch = 3;
constexpr int kExitAllIllPosed = 4;

// Bundled demonstration datasets (two frozen points 1 and sqrt(2)).
const std::vector<double> kExample1SqrtLambda = {
    1.98868, 2.0, 3.06656, 4.0, 5.00142, 6.0, 6.99975, 8.0, 8.99976, 10.0};

const std::vector<double> kExample2SqrtLambdaReal = {
    2.90145, 4.09132, 4.98819, 5.98425, 7.00424, 7.99936, 9.00732,
    9.99528, 10.9929, 12.0105, 12.9998, 13.9907, 15.006,  16.0035,
    16.9935, 18.0013, 19.0032, 19.9997, 20.9997};
const Complex kExample2PairRho(1.99593, 0.4925);

Spectrum example1_spectrum() {
  Spectrum s;
  for (double r : kExample1SqrtLambda)
    s.eigenvalues.push_back(SpectralPoint::from_rho(Complex(r, 0.0)));
  s.m_max = 10;
  s.sort_and_index();
  return s;
}

Spectrum example2_spectrum() {
  Spectrum s;
  s.eigenvalues.push_back(SpectralPoint::from_rho(std::conj(kExample2PairRho)));
  s.eigenvalues.push_back(SpectralPoint::from_rho(kExample2PairRho));
  for (double r : kExample2SqrtLambdaReal)
    s.eigenvalues.push_back(SpectralPoint::from_rho(Complex(r, 0.0)));
  s.m_max = 21;
  s.sort_and_index();
  return s;
}

Potential random5_potential(unsigned seed, int grid_points) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SineCoefficients d;
  for (int m = 0; m < 5; ++m) d.d.push_back(dist(gen));
  return synthesize_potential(d, grid_points);
}

Potential load_potential(const std::string& spec, int grid_points,
                         unsigned seed) {
  if (spec == "random5") return random5_potential(seed, grid_points);
  if (spec.size() > 4 && spec.substr(spec.size() - 4) == ".csv") {
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open potential CSV: " + spec);
    return potential_from_csv(in);
  }
  return parse_potential_expr(spec, grid_points);
}

std::string table_complex(Complex v) {
  char buf[80];
  if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v)))
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", v.real(), v.imag());
  else
    std::snprintf(buf, sizeof buf, "%.6f", v.real());
  return buf;
}

void print_spectrum_table(const Spectrum& s) {
  std::printf("  m   sqrt(lambda)            lambda\n");
  for (int m = 1; m <= s.size(); ++m) {
    const auto& p = s.at(m);
    std::printf("%3d   %-22s  %s\n", m, table_complex(p.rho).c_str(),
                table_complex(p.lambda).c_str());
  }
}

void ensure_out_dir(const std::string& out) {
  std::filesystem::create_directories(out);
}

int cmd_forward(const std::string& q_expr, const std::string& frozen_expr,
                int m_max, int grid_points, double im_height,
                const std::string& out, unsigned seed) {
  const FrozenArguments F = parse_frozen(frozen_expr);
  const Potential q = load_potential(q_expr, grid_points, seed);
  RootSearchConfig config;
  config.m_max = m_max;
  config.im_height = im_height;
  const Spectrum s = compute_spectrum(q, F, config);
  print_spectrum_table(s);
  if (!out.empty()) {
    ensure_out_dir(out);
    write_file(out + "/spectrum.json", spectrum_to_json(s));
    std::printf("wrote %s/spectrum.json\n", out.c_str());
  }
  return 0;
}

int cmd_inverse(const std::string& spectrum_path,
                const std::string& frozen_expr, int grid_points, double tau,
                const std::string& out) {
  const FrozenArguments F = parse_frozen(frozen_expr);
  const Spectrum s = spectrum_from_json(read_file(spectrum_path));
  if (!s.conjugate_closed())
    throw ParseError("spectrum file is not conjugate-closed");
  const std::vector<double> grid = uniform_grid(grid_points);
  const ReconstructionResult res = reconstruct(s, F, grid, tau);

  std::printf("  m   Delta(m^2)      G(m)          d_m\n");
  for (const auto& pm : res.per_mode) {
    if (pm.ill_posed) {
      std::printf("%3d   (ill-posed: |G| <= tau)\n", pm.m);
      continue;
    }
    std::printf("%3d   %13.6e  %12.6f  %12.6f%s\n", pm.m, pm.delta_at_m2,
                pm.G, pm.d, pm.conditioning_warning ? "  [warn: Im residue]" : "");
  }
  if (res.ill_posed_count > 0)
    std::fprintf(stderr, "warning: %d ill-posed mode(s) skipped\n",
                 res.ill_posed_count);
  if (!out.empty()) {
    ensure_out_dir(out);
    write_file(out + "/coefficients.json",
               sine_coefficients_to_json(res.coefficients));
    write_file(out + "/q_hat.csv",
               values_to_csv(grid, res.q_hat_values, "q_hat"));
    write_file(out + "/per_mode.json", per_mode_table_to_json(res));
    std::printf("wrote %s/{coefficients.json,q_hat.csv,per_mode.json}\n",
                out.c_str());
  }
  return 0;
}

int cmd_roundtrip(const std::string& q_expr, const std::string& frozen_expr,
                  int m_max, int grid_points, double tau, unsigned seed,
                  const std::string& out) {
  const FrozenArguments F = parse_frozen(frozen_expr);
  const Potential q = load_potential(q_expr, grid_points, seed);
  RootSearchConfig config;
  config.m_max = m_max;
  const Spectrum s = compute_spectrum(q, F, config);
  const std::vector<double> grid = uniform_grid(grid_points);
  const ReconstructionResult res = reconstruct(s, F, grid, tau);
  const SineCoefficients d_true = sine_coefficients(q, res.N_used);
  const std::vector<double> projection = synthesize(d_true, grid);

  double max_mode_err = 0.0;
  std::printf("  m   d_m(q)        d_m(recovered)  |error|\n");
  for (int m = 1; m <= res.N_used; ++m) {
    const double dt = d_true.d[size_t(m - 1)];
    const double dr = res.coefficients.d[size_t(m - 1)];
    max_mode_err = std::max(max_mode_err, std::abs(dt - dr));
    std::printf("%3d   %12.6f  %12.6f    %.3e\n", m, dt, dr,
                std::abs(dt - dr));
  }
  double sup = 0.0;
  for (size_t i = 0; i < grid.size(); ++i)
    sup = std::max(sup, std::abs(res.q_hat_values[i] - projection[i]));
  std::printf("max per-mode error : %.6e\n", max_mode_err);
  std::printf("sup |q_hat - P_N q|: %.6e\n", sup);
  if (!out.empty()) {
    ensure_out_dir(out);
    write_file(out + "/spectrum.json", spectrum_to_json(s));
    write_file(out + "/coefficients.json",
               sine_coefficients_to_json(res.coefficients));
  }
  return 0;
}

int cmd_check(const std::string& frozen_expr, int modes, double tau) {
  const FrozenArguments F = parse_frozen(frozen_expr);
  const UniquenessReport rep = check_uniqueness(F, modes, tau);
  std::printf("  m   G(m)\n");
  for (const auto& e : rep.values) std::printf("%3d   %12.8f\n", e.m, e.G);
  std::printf("min |G(m)| = %.10e at m = %d (tau = %g)\n", rep.min_abs_G,
              rep.worst_m, rep.tau);
  std::printf("%s\n", rep.pass ? "PASS" : "FAIL");
  return rep.pass ? 0 : 1;
}

int cmd_eval_delta(const std::string& q_expr, const std::string& frozen_expr,
                   double lambda_re, double lambda_im, int grid_points,
                   unsigned seed) {
  const FrozenArguments F = parse_frozen(frozen_expr);
  const Potential q = load_potential(q_expr, grid_points, seed);
  const Complex lambda(lambda_re, lambda_im);
  const Complex closed = delta_closed(q, F, lambda);
  const Complex det = delta_det(q, F, lambda);
  const Complex shoot = shoot_delta(q, F, lambda, M_PI / 2048.0).delta;
  std::printf("lambda        = %s\n", table_complex(lambda).c_str());
  std::printf("rho           = %s\n", table_complex(principal_rho(lambda)).c_str());
  std::printf("delta_closed  = %.17g %+.17gi\n", closed.real(), closed.imag());
  std::printf("delta_det     = %.17g %+.17gi\n", det.real(), det.imag());
  std::printf("delta_shoot   = %.17g %+.17gi\n", shoot.real(), shoot.imag());
  std::printf("|closed-det|  = %.3e\n", std::abs(closed - det));
  std::printf("|closed-shoot|= %.3e\n", std::abs(closed - shoot));
  return 0;
}

int cmd_plot_data(const std::string& experiment, const std::string& q_expr,
                  const std::string& frozen_expr, int m_max, int grid_points,
                  unsigned seed, const std::string& out) {
  ensure_out_dir(out);
  const std::vector<double> grid = uniform_grid(grid_points);

  Spectrum s;
  Potential q_true = Potential::zero(grid_points);
  FrozenArguments F({1.0, std::sqrt(2.0)});
  if (experiment == "example1") {
    s = example1_spectrum();
    q_true = parse_potential_expr("1-cos(2t)", grid_points);
  } else if (experiment == "example2") {
    s = example2_spectrum();
    q_true = parse_potential_expr("t", grid_points);
  } else if (experiment == "roundtrip") {
    F = parse_frozen(frozen_expr);
    q_true = load_potential(q_expr, grid_points, seed);
    RootSearchConfig config;
    config.m_max = m_max;
    s = compute_spectrum(q_true, F, config);
  } else {
    std::fprintf(stderr, "unknown experiment '%s' (want example1, example2, "
                 "roundtrip)\n", experiment.c_str());
    return kExitConfig;
  }

  const ReconstructionResult res = reconstruct(s, F, grid, 1e-3);
  std::vector<double> truth(grid.size()), residual(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    truth[i] = q_true.value_at(grid[i]);
    residual[i] = res.q_hat_values[i] - truth[i];
  }
  write_file(out + "/q_true.csv", values_to_csv(grid, truth, "q"));
  write_file(out + "/q_hat.csv", values_to_csv(grid, res.q_hat_values, "q_hat"));
  write_file(out + "/residual.csv", values_to_csv(grid, residual, "residual"));
  std::printf("wrote %s/{q_true.csv,q_hat.csv,residual.csv}\n", out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forward/inverse spectral toolkit for Sturm-Liouville "
               "operators with frozen arguments"};
  app.require_subcommand(1);

  std::string q_expr = "zero", frozen_expr = "1,sqrt(2)";
  std::string spectrum_path, out_dir, experiment;
  int m_max = 20, grid_points = 513, modes = 50;
  double tau = 1e-3, im_height = 2.0;
  double lambda_re = 0.0, lambda_im = 0.0;
  unsigned seed = 1;

  auto* fwd = app.add_subcommand("forward", "potential -> spectrum");
  fwd->add_option("--q", q_expr, "potential expression, CSV path, or random5");
  fwd->add_option("--frozen", frozen_expr, "comma-separated frozen points");
  fwd->add_option("--m-max", m_max, "search covers Re rho in [0, m_max+1/2]");
  fwd->add_option("--grid", grid_points, "uniform grid size");
  fwd->add_option("--im-height", im_height, "|Im rho| search ceiling");
  fwd->add_option("--out", out_dir, "output directory");
  fwd->add_option("--seed", seed, "seed for random5 potentials");

  auto* inv = app.add_subcommand("inverse", "spectrum file -> potential");
  inv->add_option("--spectrum", spectrum_path, "spectrum JSON path")
      ->required();
  inv->add_option("--frozen", frozen_expr, "comma-separated frozen points");
  inv->add_option("--grid", grid_points, "reconstruction grid size");
  inv->add_option("--tol", tau, "|G(m)| gate for recoverable modes");
  inv->add_option("--out", out_dir, "output directory");

  auto* rt = app.add_subcommand("roundtrip", "forward then inverse, report errors");
  rt->add_option("--q", q_expr, "potential expression, CSV path, or random5");
  rt->add_option("--frozen", frozen_expr, "comma-separated frozen points");
  rt->add_option("--m-max", m_max, "number of eigenvalues to use");
  rt->add_option("--grid", grid_points, "grid size");
  rt->add_option("--tol", tau, "|G(m)| gate");
  rt->add_option("--seed", seed, "seed for random5 potentials");
  rt->add_option("--out", out_dir, "output directory");

  auto* chk = app.add_subcommand("check", "uniqueness condition on G(m)");
  chk->add_option("--frozen", frozen_expr, "comma-separated frozen points");
  chk->add_option("--modes", modes, "check m = 1..modes");
  chk->add_option("--tol", tau, "pass threshold on min |G(m)|");

  auto* ev = app.add_subcommand("eval-delta",
                                "characteristic function by all routes");
  ev->add_option("--q", q_expr, "potential expression, CSV path, or random5");
  ev->add_option("--frozen", frozen_expr, "comma-separated frozen points");
  ev->add_option("--lambda-re", lambda_re, "Re lambda")->required();
  ev->add_option("--lambda-im", lambda_im, "Im lambda");
  ev->add_option("--grid", grid_points, "grid size");
  ev->add_option("--seed", seed, "seed for random5 potentials");

  auto* pd = app.add_subcommand("plot-data", "CSV bundle for plotting");
  pd->add_option("--experiment", experiment, "example1 | example2 | roundtrip")
      ->required();
  pd->add_option("--q", q_expr, "potential for the roundtrip experiment");
  pd->add_option("--frozen", frozen_expr, "frozen points for roundtrip");
  pd->add_option("--m-max", m_max, "eigenvalues for roundtrip");
  pd->add_option("--grid", grid_points, "grid size");
  pd->add_option("--seed", seed, "seed for random5 potentials");
  pd->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (fwd->parsed())
      return cmd_forward(q_expr, frozen_expr, m_max, grid_points, im_height,
                         out_dir, seed);
    if (inv->parsed())
      return cmd_inverse(spectrum_path, frozen_expr, grid_points, tau, out_dir);
    if (rt->parsed())
      return cmd_roundtrip(q_expr, frozen_expr, m_max, grid_points, tau, seed,
                           out_dir);
    if (chk->parsed()) return cmd_check(frozen_expr, modes, tau);
    if (ev->parsed())
      return cmd_eval_delta(q_expr, frozen_expr, lambda_re, lambda_im,
                            grid_points, seed);
    if (pd->parsed())
      return cmd_plot_data(experiment, q_expr, frozen_expr, m_max, grid_points,
                           seed, out_dir);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const CountMismatch& e) {
    std::fprintf(stderr, "root accounting failed: %s\n", e.what());
    return kExitCountMismatch;
  } catch (const IllPosedMode& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitAllIllPosed;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
