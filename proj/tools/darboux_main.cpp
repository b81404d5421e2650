// darboux: command-line front end.
//
//   darboux [global flags] verify    --dim N --flavor F [--parts ...] [--corrupt Iij]
//   darboux [global flags] spectrum  --dim N --l L --lambda X --levels K [--flavor F|all]
//   darboux [global flags] classical --dim N --lambda X [--t-end T] [--tolerance TOL]
//   darboux [global flags] figures   [--which 1..5]
//
// Exit codes: 0 pass, 1 a check failed, 2 bad flags.

#include "report.hpp"

#include "darboux/classical.hpp"
#include "darboux/figures.hpp"
#include "darboux/radial.hpp"
#include "darboux/verification.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace darboux;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadFlags = 2;

// Flag values rejected after parsing (cross-field checks, domain errors).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 7;
  bool no_timestamp = false;
};

struct ModelFlags {
  int dim = 3;
  double lambda = 0.02;
  double omega = 1.0;
  double hbar = 1.0;

  [[nodiscard]] ModelParams params() const {
    ModelParams p{dim, lambda, omega, hbar};
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

void add_model_flags(CLI::App* cmd, ModelFlags& m) {
  cmd->add_option("--dim", m.dim, "Dimension N")->check(CLI::Range(2, 5));
  cmd->add_option("--lambda", m.lambda, "Deformation parameter (>= 0)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--omega", m.omega, "Oscillator frequency")->check(CLI::NonNegativeNumber);
  cmd->add_option("--hbar", m.hbar, "Planck constant")->check(CLI::PositiveNumber);
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  file << text;
}

cli::ReportContext context(const Global& g, std::chrono::steady_clock::time_point start) {
  return {g.seed, !g.no_timestamp,
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

struct VerifyFlags {
  ModelFlags model;
  std::string flavor = "tlb";
  std::vector<std::string> parts;
  std::string corrupt;
  unsigned threads = 0;
};

int run_verify(const Global& g, const VerifyFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  if (f.model.dim > 4) throw UsageError("verify: --dim must be 2, 3 or 4");
  algebra::VerifyOptions options;
  options.dim = f.model.dim;
  options.flavor = *algebra::parse_flavor(f.flavor);
  if (!f.parts.empty()) {
    options.parts.clear();
    for (const auto& p : f.parts) options.parts.insert(*algebra::parse_part(p));
  }
  if (!f.corrupt.empty()) options.corrupt = f.corrupt;
  options.threads = f.threads ? f.threads : std::max(1u, std::thread::hardware_concurrency());
  algebra::VerificationReport report;
  try {
    report = algebra::verify_theorem(options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(g, g.format == "csv" ? cli::verify_csv(report) : cli::verify_json(report, options, context(g, start)));
  if (!report.all_passed())
    std::cerr << "verify: " << report.failures() << " of " << report.checks.size() << " checks failed\n";
  return report.all_passed() ? kPass : kFail;
}

struct SpectrumFlags {
  ModelFlags model;
  int l = 0;
  int levels = 6;
  int points = 4000;
  double q_max = 0.0;
  int refinements = 2;
  std::string flavor = "tlb";
  double tolerance = 1e-5;
};

int run_spectrum(const Global& g, const SpectrumFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  cli::SpectrumRequest request;
  request.problem.params = f.model.params();
  if (!(request.problem.params.omega > 0.0)) throw UsageError("spectrum: --omega must be > 0");
  request.problem.l = f.l;
  request.problem.grid = {f.q_max, f.points};
  request.levels = f.levels;
  request.solve.refinements = f.refinements;
  request.tolerance = f.tolerance;
  const bool all = f.flavor == "all";
  request.problem.flavor = all ? spectra::RadialFlavor::tlb : *spectra::parse_radial_flavor(f.flavor);
  spectra::SpectrumReport report;
  try {
    report = spectra::solve_bound_states(request.problem, request.levels, request.solve);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (all) request.isospectrality = spectra::isospectrality_check(request.problem.params, f.l, f.levels, f.points);
  emit(g, g.format == "csv" ? cli::spectrum_csv(report, request)
                            : cli::spectrum_json(report, request, context(g, start)));
  const bool ok = cli::spectrum_passed(report, request);
  if (!ok) std::cerr << "spectrum: tolerance not met, levels truncated, or flavors disagree\n";
  return ok ? kPass : kFail;
}

struct ClassicalFlags {
  ModelFlags model;
  int states = 20;
  double t_end = 100.0;
  double tolerance = 1e-10;
};

int run_classical(const Global& g, const ClassicalFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  classical::SuiteOptions options;
  options.states = f.states;
  options.seed = g.seed;
  options.t_end = f.t_end;
  options.tolerance = f.tolerance;
  classical::SuiteReport report;
  try {
    report = classical::run_suite(f.model.params(), options);
  } catch (const classical::IntegrationError& e) {
    std::cerr << "classical: integration failed: " << e.what() << '\n';
    return kFail;
  } catch (const std::domain_error& e) {
    std::cerr << "classical: " << e.what() << '\n';
    return kFail;
  }
  emit(g, g.format == "csv" ? cli::classical_csv(report) : cli::classical_json(report, context(g, start)));
  if (report.inconclusive_closures() > 0)
    std::cerr << "classical: " << report.inconclusive_closures() << " closure checks inconclusive\n";
  if (!report.invariants_ok()) std::cerr << "classical: drift, bracket or rank check failed\n";
  return report.invariants_ok() ? kPass : kFail;
}

struct FiguresFlags {
  std::vector<int> which;
  std::string dir = ".";
};

int run_figures(const Global& g, const FiguresFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<int> which = f.which;
  if (which.empty()) which = {1, 2, 3, 4, 5};
  std::filesystem::create_directories(f.dir);
  std::vector<figures::FigureData> figs;
  std::vector<std::string> files;
  for (int k : which) {
    figs.push_back(figures::make_figure(k));
    const auto base = std::filesystem::path(f.dir) / ("figure" + std::to_string(k));
    const std::string csv = base.string() + ".csv";
    const std::string sidecar = base.string() + ".json";
    std::ofstream(csv, std::ios::binary) << figures::to_csv(figs.back());
    std::ofstream(sidecar, std::ios::binary) << cli::figure_sidecar_json(figs.back(), context(g, start));
    files.push_back(csv);
    files.push_back(sidecar);
  }
  emit(g, g.format == "csv" ? cli::figures_summary_csv(figs)
                            : cli::figures_summary_json(figs, files, context(g, start)));
  return kPass;
}

std::vector<std::string> flavor_names() {
  return {"schrodinger", "lb", "tlb", "pdm", "tpdm"};
}

std::vector<std::string> part_names() {
  std::vector<std::string> out;
  for (auto p : algebra::all_parts()) out.emplace_back(algebra::part_name(p));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darboux III oscillator: symbolic verification, spectra, classical dynamics, figure data"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit generated_at and elapsed time");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Exact commutator and identity checks");
  add_model_flags(verify, vf.model);
  verify->add_option("--flavor", vf.flavor, "Quantization")->check(CLI::IsMember(flavor_names()));
  verify->add_option("--parts", vf.parts, "Checks to run (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember(part_names()));
  verify->add_option("--corrupt", vf.corrupt, "Drop the omega^2 q_i q_j term of a Fradkin entry, e.g. I11");
  verify->add_option("--threads", vf.threads, "Worker threads (default: hardware)");

  SpectrumFlags sf;
  auto* spectrum = app.add_subcommand("spectrum", "Radial bound states against the closed form");
  add_model_flags(spectrum, sf.model);
  spectrum->add_option("--l", sf.l, "Angular quantum number")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--levels", sf.levels, "Number of radial levels")->check(CLI::PositiveNumber);
  spectrum->add_option("--grid", sf.points, "Interior grid points M")->check(CLI::Range(100, 10000000));
  spectrum->add_option("--qmax", sf.q_max, "Right end of the Q interval (0: automatic)")
      ->check(CLI::NonNegativeNumber);
  spectrum->add_option("--refinements", sf.refinements, "Extra grids, each halving the step")
      ->check(CLI::Range(0, 6));
  spectrum->add_option("--flavor", sf.flavor, "Flavor, or all for the isospectrality check")
      ->check(CLI::IsMember({"schrodinger", "tlb", "tpdm", "all"}));
  spectrum->add_option("--tolerance", sf.tolerance, "Relative tolerance against the closed form")
      ->check(CLI::PositiveNumber);

  ClassicalFlags cf;
  auto* classical_cmd = app.add_subcommand("classical", "Integrate random orbits and check the invariants");
  add_model_flags(classical_cmd, cf.model);
  classical_cmd->add_option("--states", cf.states, "Random initial conditions")->check(CLI::Range(1, 100000));
  classical_cmd->add_option("--t-end", cf.t_end, "Integration time")->check(CLI::PositiveNumber);
  classical_cmd->add_option("--tolerance", cf.tolerance, "Integrator tolerance")->check(CLI::PositiveNumber);

  FiguresFlags ff;
  auto* figures_cmd = app.add_subcommand("figures", "Write figure curves (CSV) and landmark sidecars (JSON)");
  figures_cmd->add_option("--which", ff.which, "Figures to emit (default all)")
      ->delimiter(',')
      ->check(CLI::Range(1, 5));
  figures_cmd->add_option("--dir", ff.dir, "Output directory for the figure files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kBadFlags;
  }

  try {
    if (*verify) return run_verify(g, vf);
    if (*spectrum) return run_spectrum(g, sf);
    if (*classical_cmd) return run_classical(g, cf);
    if (*figures_cmd) return run_figures(g, ff);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kBadFlags;
}
