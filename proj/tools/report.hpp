#pragma once

// Serialization of the command reports. JSON reports carry
// "schema": "darboux-report/1"; CSV reports are one flat table each.

#include "darboux/classical.hpp"
#include "darboux/figures.hpp"
#include "darboux/radial.hpp"
#include "darboux/verification.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace darboux::cli {

inline constexpr const char* kSchema = "darboux-report/1";

struct ReportContext {
  std::uint64_t seed = 0;
  bool timestamp = true;
  /// Wall time of the run; written only together with the timestamp.
  double elapsed_seconds = 0.0;
};

struct VerifyRequest {
  algebra::VerifyOptions options;
};

struct SpectrumRequest {
  spectra::RadialProblem problem;
  int levels = 6;
  spectra::SolveOptions solve;
  double tolerance = 1e-5;
  /// Present when every flavor was requested.
  std::optional<spectra::IsospectralityReport> isospectrality;
};

[[nodiscard]] std::string verify_json(const algebra::VerificationReport& report,
                                      const algebra::VerifyOptions& options, const ReportContext& ctx);
[[nodiscard]] std::string verify_csv(const algebra::VerificationReport& report);

[[nodiscard]] bool spectrum_passed(const spectra::SpectrumReport& report, const SpectrumRequest& request);
[[nodiscard]] std::string spectrum_json(const spectra::SpectrumReport& report, const SpectrumRequest& request,
                                        const ReportContext& ctx);
[[nodiscard]] std::string spectrum_csv(const spectra::SpectrumReport& report, const SpectrumRequest& request);

[[nodiscard]] std::string classical_json(const classical::SuiteReport& report, const ReportContext& ctx);
[[nodiscard]] std::string classical_csv(const classical::SuiteReport& report);

/// Landmark sidecar written next to a figure's CSV.
[[nodiscard]] std::string figure_sidecar_json(const figures::FigureData& figure, const ReportContext& ctx);
/// Summary of a figures run: files written and all landmarks.
[[nodiscard]] std::string figures_summary_json(const std::vector<figures::FigureData>& figures,
                                               const std::vector<std::string>& files,
                                               const ReportContext& ctx);
[[nodiscard]] std::string figures_summary_csv(const std::vector<figures::FigureData>& figures);

}  // namespace darboux::cli
