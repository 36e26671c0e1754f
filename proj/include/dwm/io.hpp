#pragma once

// JSON and CSV serialization of reports, and the run configuration read by
// the command-line tool.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dwm/error.hpp"
#include "dwm/observables.hpp"
#include "dwm/resonance.hpp"
#include "dwm/units.hpp"
#include "dwm/verify.hpp"

namespace dwm {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// CSV

/// One cell: a number printed with 9 significant digits, or a text marker.
using CsvCell = std::variant<double, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  void add_row(std::vector<CsvCell> row) {
    detail::require(row.size() == header.size(), "CSV row width does not match header");
    rows.push_back(std::move(row));
  }
};

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

inline std::string write_csv(const CsvTable& t) {
  std::string out;
  auto line = [&](const auto& cells, auto&& fmt) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out += ',';
      out += fmt(cells[k]);
    }
    out += '\n';
  };
  line(t.header, [](const std::string& s) { return s; });
  for (const auto& r : t.rows)
    line(r, [](const CsvCell& c) {
      return std::holds_alternative<double>(c) ? format_number(std::get<double>(c))
                                               : std::get<std::string>(c);
    });
  return out;
}

inline CsvTable read_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cur;
    std::istringstream ls(s);
    while (std::getline(ls, cur, ',')) cells.push_back(cur);
    if (!s.empty() && s.back() == ',') cells.emplace_back();
    return cells;
  };
  if (!std::getline(in, line)) throw validation_error("empty CSV input");
  t.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<CsvCell> row;
    for (const auto& c : split(line)) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (!c.empty() && end == c.c_str() + c.size())
        row.emplace_back(v);
      else
        row.emplace_back(c);
    }
    t.add_row(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// JSON

inline std::string write_json(const json& j) { return j.dump(2) + "\n"; }

inline json read_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw validation_error(std::string("malformed JSON: ") + ex.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw validation_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw validation_error("cannot write " + path);
  f << text;
}

inline json to_json(const NormalizedConfig& n) {
  return {{"e0", n.e0},   {"lambda", n.lambda_}, {"h", n.h},
          {"d", n.d},     {"s", static_cast<int>(n.s)}, {"epsilon", static_cast<int>(n.epsilon)},
          {"P", n.big_p}};
}

inline json to_json(const PhysicalConfig& p) {
  return {{"omega", p.omega}, {"Hz", p.H_z},     {"H", p.H_wave},       {"p", p.p_z},
          {"epsilon", static_cast<int>(p.epsilon)}, {"mass", p.mass}, {"charge", p.charge}};
}

inline json to_json(const ResidualReport& r) {
  json scanned = json::array();
  for (const auto& c : r.scanned) scanned.push_back({{"convention", c.convention}, {"residual_rel", c.residual_rel}});
  return {{"status", r.pass ? "PASS" : "FAIL"},
          {"residual_rel", r.residual_rel},
          {"threshold", certify_threshold},
          {"samples", r.samples},
          {"method", to_string(r.method)},
          {"convention", r.convention},
          {"scanned", scanned}};
}

inline ResidualReport residual_report_from_json(const json& j) {
  ResidualReport r;
  r.pass = j.at("status").get<std::string>() == "PASS";
  r.residual_rel = j.at("residual_rel").get<double>();
  r.samples = j.at("samples").get<int>();
  r.method = j.at("method").get<std::string>() == to_string(DerivativeMethod::analytic)
                 ? DerivativeMethod::analytic
                 : DerivativeMethod::finite_difference;
  r.convention = j.at("convention").get<std::string>();
  for (const auto& c : j.at("scanned"))
    r.scanned.push_back({c.at("convention").get<std::string>(), c.at("residual_rel").get<double>()});
  return r;
}

/// Closed-form averages; p̄x and p̄y evaluated at (t, z).
inline json to_json(const AveragesReport& a, double t = 0.0, double z = 0.0) {
  const cplx py = a.py_printed(t, z);
  return {{"e_bar", a.e_bar},
          {"pz_bar", a.pz_bar},
          {"zeta", a.zeta},
          {"dx_dpx", a.dx_dpx},
          {"dy_dpy", a.dy_dpy},
          {"t", t},
          {"z", z},
          {"px", a.px(t, z)},
          {"py_printed_imag", py.imag()}};
}

inline json to_json(const QuadratureAverages& q) {
  return {{"norm", q.norm},           {"e_bar", q.e_bar},   {"pz_bar", q.pz_bar},
          {"px_re", q.px.real()},     {"px_im", q.px.imag()}, {"py_re", q.py.real()},
          {"py_im", q.py.imag()},     {"dx", q.dx},         {"dy", q.dy},
          {"dpx", q.dpx},             {"dpy", q.dpy},       {"order", q.order},
          {"converged", q.converged}};
}

inline json to_json(const MomentumYFinding& f) {
  return {{"quadrature_re", f.quadrature.real()},
          {"quadrature_im", f.quadrature.imag()},
          {"printed_imag", f.printed.imag()},
          {"matches_printed", f.matches_printed},
          {"matches_without_i", f.matches_without_i},
          {"matches_printed_times_i", f.matches_printed_times_i}};
}

inline std::string to_string(Observable o) {
  return o == Observable::magnetic_moment ? "mu_z" : "s3";
}

/// Fitted parameters only; the samples go to CSV.
inline json to_json(const ObservableSeries& s) {
  return {{"observable", to_string(s.observable)},
          {"samples", s.times.size()},
          {"const_part", s.const_part()},
          {"osc_amplitude", s.osc_amplitude()},
          {"osc_freq", s.osc_freq()},
          {"phase", s.fit.phase},
          {"rms_residual", s.fit.rms_residual}};
}

inline CsvTable series_csv(const ObservableSeries& s) {
  CsvTable t{{"t", to_string(s.observable)}, {}};
  for (std::size_t k = 0; k < s.times.size(); ++k) t.add_row({s.times[k], s.values[k]});
  return t;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json to_json(const ResonanceSetup& r) {
  json j = {{"pi", r.pair.pi_},
            {"eta", r.pair.eta},
            {"e0", r.e0},
            {"s", static_cast<int>(r.s)},
            {"root_1", r.root_1},
            {"root_2", r.root_2},
            {"d2_1", r.d2_1},
            {"d2_2", r.d2_2},
            {"d_star", r.d_star},
            {"Hz_star", r.field_star},
            {"amplitude_empirical", r.amplitude_empirical},
            {"amplitude_empirical_magnetons", r.amplitude_empirical_mu},
            {"amplitude_closed_magnetons", optional_json(r.amplitude_closed)},
            {"closed_over_empirical", optional_json(r.ratio)},
            {"amplitude_mirrored_magnetons", optional_json(r.amplitude_mirrored)},
            {"mirrored_over_empirical", optional_json(r.ratio_mirrored)},
            {"order_doubling_change", r.order_doubling_change}};
  if (!r.closed_form_note.empty()) j["closed_form_note"] = r.closed_form_note;
  return j;
}

inline json to_json(const PairingReport& p) {
  return {{"roots", {p.first + 1, p.second + 1}},
          {"pi", p.pair.pi_},
          {"eta", p.pair.eta},
          {"pi_negative", p.pi_negative},
          {"d_star", optional_json(p.d_star)},
          {"amplitude_closed_magnetons", optional_json(p.amplitude_closed)},
          {"amplitude_empirical_magnetons", optional_json(p.amplitude_empirical_mu)},
          {"admissible", p.admissible()},
          {"note", p.note}};
}

inline CsvTable flop_csv(const FlopScan& f) {
  CsvTable t{{"d", "mu_amplitude", "s3_amplitude"}, {}};
  for (std::size_t k = 0; k < f.d.size(); ++k) t.add_row({f.d[k], f.mu_amplitude[k], f.s3_amplitude[k]});
  return t;
}

inline json to_json(const FlopScan& f) {
  return {{"d_star", f.d_star},
          {"mu_argmax_d", f.d[f.mu_argmax]},
          {"mu_interior_maximum", f.mu_interior_maximum},
          {"mu_peak_at_d_star", f.mu_peak_dominates},
          {"s3_monotone", f.s3_monotone},
          {"s3_interior_extremum", f.s3_interior_extremum},
          {"noise", f.noise}};
}

// ---------------------------------------------------------------------------
// Run configuration

inline constexpr int kSchemaVersion = 1;

struct PhysicalInput {
  std::string particle = "electron";
  std::optional<double> mass, charge;
  std::optional<double> omega, H_z, H_wave, p_z;
  int epsilon = 1;
};

struct NormalizedInput {
  std::optional<double> e0, pi_, eta, lambda_, h, d;
  int s = -1;
  int epsilon = 1;
};

struct RunConfig {
  std::string command;
  std::optional<PhysicalInput> physical;
  std::optional<NormalizedInput> normalized;
  std::string out;  // empty: stdout
  std::string format = "json";
  int quadrature_order = 24;
  int fd_order = 8;

  void validate() const {
    detail::require(physical.has_value() != normalized.has_value(),
                    "exactly one of the physical and normalized input blocks must be given");
    detail::require(format == "json" || format == "csv", "format must be json or csv");
    detail::require(quadrature_order >= 2 && quadrature_order <= 256,
                    "quadrature order must be in [2, 256]");
    detail::require(fd_order == 2 || fd_order == 4 || fd_order == 6 || fd_order == 8,
                    "finite-difference order must be 2, 4, 6 or 8");
  }
};

namespace detail {

template <class T>
void read_opt(const json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key) && !j.at(key).is_null()) dst = j.at(key).get<T>();
}

}  // namespace detail

inline RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw validation_error("config must be a JSON object");
  if (!j.contains("schema_version")) throw validation_error("config lacks schema_version");
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw validation_error("unsupported schema_version");
  RunConfig c;
  try {
    if (j.contains("command")) c.command = j.at("command").get<std::string>();
    if (j.contains("physical")) {
      const auto& p = j.at("physical");
      PhysicalInput in;
      if (p.contains("particle")) in.particle = p.at("particle").get<std::string>();
      detail::read_opt(p, "mass", in.mass);
      detail::read_opt(p, "charge", in.charge);
      detail::read_opt(p, "omega", in.omega);
      detail::read_opt(p, "Hz", in.H_z);
      detail::read_opt(p, "H", in.H_wave);
      detail::read_opt(p, "p", in.p_z);
      if (p.contains("epsilon")) in.epsilon = p.at("epsilon").get<int>();
      c.physical = in;
    }
    if (j.contains("normalized")) {
      const auto& n = j.at("normalized");
      NormalizedInput in;
      detail::read_opt(n, "e0", in.e0);
      detail::read_opt(n, "pi", in.pi_);
      detail::read_opt(n, "eta", in.eta);
      detail::read_opt(n, "lambda", in.lambda_);
      detail::read_opt(n, "h", in.h);
      detail::read_opt(n, "d", in.d);
      if (n.contains("s")) in.s = n.at("s").get<int>();
      if (n.contains("epsilon")) in.epsilon = n.at("epsilon").get<int>();
      c.normalized = in;
    }
    if (j.contains("output")) {
      const auto& o = j.at("output");
      if (o.contains("path")) c.out = o.at("path").get<std::string>();
      if (o.contains("format")) c.format = o.at("format").get<std::string>();
    }
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      if (t.contains("quadrature_order")) c.quadrature_order = t.at("quadrature_order").get<int>();
      if (t.contains("fd_order")) c.fd_order = t.at("fd_order").get<int>();
    }
  } catch (const json::exception& ex) {
    throw validation_error(std::string("bad config field: ") + ex.what());
  }
  return c;
}

inline json to_json(const RunConfig& c) {
  json j = {{"schema_version", kSchemaVersion}, {"command", c.command}};
  auto put = [](json& dst, const char* key, const auto& v) {
    if (v) dst[key] = *v;
  };
  if (c.physical) {
    json p = {{"particle", c.physical->particle}};
    put(p, "mass", c.physical->mass);
    put(p, "charge", c.physical->charge);
    put(p, "omega", c.physical->omega);
    put(p, "Hz", c.physical->H_z);
    put(p, "H", c.physical->H_wave);
    put(p, "p", c.physical->p_z);
    p["epsilon"] = c.physical->epsilon;
    j["physical"] = p;
  }
  if (c.normalized) {
    json n = json::object();
    put(n, "e0", c.normalized->e0);
    put(n, "pi", c.normalized->pi_);
    put(n, "eta", c.normalized->eta);
    put(n, "lambda", c.normalized->lambda_);
    put(n, "h", c.normalized->h);
    put(n, "d", c.normalized->d);
    n["s"] = c.normalized->s;
    n["epsilon"] = c.normalized->epsilon;
    j["normalized"] = n;
  }
  j["output"] = {{"path", c.out}, {"format", c.format}};
  j["tolerances"] = {{"quadrature_order", c.quadrature_order}, {"fd_order", c.fd_order}};
  return j;
}

}  // namespace dwm
