#include "report.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace darboux::cli {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
  return v;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Json envelope(const char* command, const ReportContext& ctx) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  if (ctx.timestamp) {
    j["generated_at"] = utc_now();
    j["elapsed_seconds"] = ctx.elapsed_seconds;
  }
  j["seed"] = ctx.seed;
  return j;
}

Json model_params(const ModelParams& p) {
  return Json{{"dim", p.dim}, {"lambda", p.lambda}, {"omega", p.omega}, {"hbar", p.hbar}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Quotes a CSV field when needed.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

Json vector_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

}  // namespace

std::string verify_json(const algebra::VerificationReport& report, const algebra::VerifyOptions& options,
                        const ReportContext& ctx) {
  Json j = envelope("verify", ctx);
  Json parts = Json::array();
  for (auto p : options.parts) parts.push_back(std::string(algebra::part_name(p)));
  j["params"] = {{"dim", report.dim},
                 {"flavor", std::string(algebra::flavor_name(report.flavor))},
                 {"parts", parts},
                 {"corrupt", options.corrupt ? Json(*options.corrupt) : Json(nullptr)}};
  j["passed"] = report.all_passed();
  j["checks_run"] = report.checks.size();
  j["failures"] = report.failures();
  j["bounds"] = {{"momentum_degree", algebra::kMaxMomentumDegree}, {"d_power", algebra::kMaxDPower}};
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"part", c.part},
                      {"relation", c.relation},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"zero", c.commutator_zero},
                      {"residual_terms", c.residual_terms},
                      {"residual", c.residual},
                      {"product_degree", c.product_degree},
                      {"product_d_power", c.product_d_power},
                      {"within_degree_bound", c.within_degree_bound},
                      {"passed", c.passed()}});
  j["checks"] = checks;
  return dump(j);
}

std::string verify_csv(const algebra::VerificationReport& report) {
  std::ostringstream out;
  out << "part,relation,lhs,rhs,passed,residual_terms,product_degree,product_d_power\n";
  for (const auto& c : report.checks)
    out << field(c.part) << ',' << c.relation << ',' << field(c.lhs) << ',' << field(c.rhs) << ','
        << (c.passed() ? "true" : "false") << ',' << c.residual_terms << ',' << c.product_degree << ','
        << c.product_d_power << '\n';
  return out.str();
}

bool spectrum_passed(const spectra::SpectrumReport& report, const SpectrumRequest& request) {
  if (report.truncated || report.levels.empty()) return false;
  if (!(report.max_rel_residual() <= request.tolerance)) return false;
  return !request.isospectrality || request.isospectrality->agree();
}

std::string spectrum_json(const spectra::SpectrumReport& report, const SpectrumRequest& request,
                          const ReportContext& ctx) {
  Json j = envelope("spectrum", ctx);
  Json params = model_params(report.params);
  params["l"] = report.l;
  params["flavor"] = request.isospectrality ? std::string("all") : std::string(spectra::flavor_name(report.flavor));
  j["params"] = params;
  j["passed"] = spectrum_passed(report, request);
  j["tolerance"] = request.tolerance;
  j["threshold"] = report.threshold ? Json(*report.threshold) : Json("infinity");
  j["count_below_threshold"] = report.count_below_threshold;
  j["grid"] = {{"q_max", report.q_max},
               {"points", report.points},
               {"refinements", report.refinements},
               {"extrapolated", report.extrapolated}};
  j["truncated"] = report.truncated;
  j["warnings"] = report.warnings;
  j["max_rel_residual"] = number(report.max_rel_residual());
  j["min_measured_order"] = number(report.min_measured_order());
  Json levels = Json::array();
  for (const auto& l : report.levels)
    levels.push_back({{"n_r", l.n_r},
                      {"n", l.n},
                      {"E_numeric", l.e_numeric},
                      {"E_closed", l.e_closed},
                      {"abs_residual", l.abs_residual},
                      {"rel_residual", l.rel_residual},
                      {"measured_order", number(l.measured_order)},
                      {"grid_values", vector_json(l.grid_values)}});
  j["levels"] = levels;
  if (request.isospectrality) {
    const auto& iso = *request.isospectrality;
    j["isospectrality"] = {{"closed", vector_json(iso.closed)},
                           {"schrodinger", vector_json(iso.schrodinger)},
                           {"tlb", vector_json(iso.tlb)},
                           {"tpdm", vector_json(iso.tpdm)},
                           {"max_pairwise_rel", iso.max_pairwise_rel},
                           {"max_closed_rel", iso.max_closed_rel},
                           {"tolerance", iso.tolerance},
                           {"n2_operators_identical", iso.n2_operators_identical
                                                          ? Json(*iso.n2_operators_identical)
                                                          : Json(nullptr)},
                           {"agree", iso.agree()}};
  }
  return dump(j);
}

std::string spectrum_csv(const spectra::SpectrumReport& report, const SpectrumRequest& request) {
  std::ostringstream out;
  out << "n_r,n,E_numeric,E_closed,abs_residual,rel_residual,measured_order";
  const auto* iso = request.isospectrality ? &*request.isospectrality : nullptr;
  if (iso) out << ",E_schrodinger,E_tlb,E_tpdm";
  out << '\n';
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const auto& l = report.levels[i];
    out << l.n_r << ',' << l.n << ',' << num(l.e_numeric) << ',' << num(l.e_closed) << ','
        << num(l.abs_residual) << ',' << num(l.rel_residual) << ',' << num(l.measured_order);
    if (iso && i < iso->tlb.size())
      out << ',' << num(iso->schrodinger[i]) << ',' << num(iso->tlb[i]) << ',' << num(iso->tpdm[i]);
    out << '\n';
  }
  return out.str();
}

std::string classical_json(const classical::SuiteReport& report, const ReportContext& ctx) {
  Json j = envelope("classical", ctx);
  j["params"] = model_params(report.params);
  j["options"] = {{"states", report.options.states},
                  {"t_end", report.options.t_end},
                  {"tolerance", report.options.tolerance},
                  {"drift_limit", report.options.drift_limit},
                  {"bracket_limit", report.options.bracket_limit}};
  j["passed"] = report.invariants_ok();
  j["summary"] = {{"max_drift", report.max_drift()},
                  {"max_bracket", report.max_bracket()},
                  {"min_rank", report.min_rank()},
                  {"expected_rank", 2 * report.params.dim - 1},
                  {"max_closure_distance", report.max_closure_distance()},
                  {"inconclusive_closures", report.inconclusive_closures()}};
  Json states = Json::array();
  for (const auto& s : report.states)
    states.push_back({{"q0", s.initial.q},
                      {"p0", s.initial.p},
                      {"energy", s.energy},
                      {"max_drift", s.max_drift},
                      {"max_bracket", s.max_bracket},
                      {"rank", s.rank},
                      {"closure",
                       {{"conclusive", s.closure.conclusive},
                        {"period", number(s.closure.period)},
                        {"period_estimate", number(s.closure.period_estimate)},
                        {"distance", number(s.closure.distance)}}}});
  j["states"] = states;
  return dump(j);
}

std::string classical_csv(const classical::SuiteReport& report) {
  std::ostringstream out;
  out << "state,energy,max_drift,max_bracket,rank,closure_conclusive,period,period_estimate,closure_distance\n";
  for (std::size_t i = 0; i < report.states.size(); ++i) {
    const auto& s = report.states[i];
    out << i << ',' << num(s.energy) << ',' << num(s.max_drift) << ',' << num(s.max_bracket) << ',' << s.rank
        << ',' << (s.closure.conclusive ? "true" : "false") << ',' << num(s.closure.period) << ','
        << num(s.closure.period_estimate) << ',' << num(s.closure.distance) << '\n';
  }
  return out.str();
}

namespace {

Json landmarks_json(const figures::FigureData& figure) {
  Json l;
  for (const auto& m : figure.landmarks) l[m.name] = number(m.value);
  return l;
}

}  // namespace

std::string figure_sidecar_json(const figures::FigureData& figure, const ReportContext& ctx) {
  Json j = envelope("figures", ctx);
  j["figure"] = figure.number;
  j["title"] = figure.title;
  j["columns"] = figure.columns;
  j["landmarks"] = landmarks_json(figure);
  return dump(j);
}

std::string figures_summary_json(const std::vector<figures::FigureData>& figures,
                                 const std::vector<std::string>& files, const ReportContext& ctx) {
  Json j = envelope("figures", ctx);
  j["files"] = files;
  Json list = Json::array();
  for (const auto& f : figures)
    list.push_back({{"figure", f.number}, {"title", f.title}, {"landmarks", landmarks_json(f)}});
  j["figures"] = list;
  return dump(j);
}

std::string figures_summary_csv(const std::vector<figures::FigureData>& figures) {
  std::ostringstream out;
  out << "figure,landmark,value\n";
  for (const auto& f : figures)
    for (const auto& m : f.landmarks) out << f.number << ',' << field(m.name) << ',' << num(m.value) << '\n';
  return out.str();
}

}  // namespace darboux::cli
