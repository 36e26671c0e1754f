// Command-line front end.
//
//   dwm <command> [options]
//
// Commands: normalize, solve, certify, observe, resonance, tables, sweep.
// Exit codes: 0 success, 2 validation error, 3 certification FAIL,
// 4 unphysical parameters, 1 internal consistency failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwm/dwm.hpp"

using namespace dwm;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCertification = 3;
constexpr int kExitDomain = 4;
constexpr int kExitConsistency = 1;

const double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Flags {
  std::string config, out, format, particle;
  std::optional<double> mass, charge, Hz, H, omega, p, epsilon, e0, h, pi, eta, lambda, d, s;
  std::optional<int> quadrature_order, fd_order;
  // observe
  double t = 0.0, z = 0.0;
  // sweep
  std::string axis = "d", scale = "lin";
  double from = 0.0, to = 0.0;
  int points = 11;
  // resonance
  int grid_points = 13;
  double decades = 3.0;
};

bool any_physical(const Flags& f) {
  return f.Hz || f.H || f.omega || f.p || f.mass || f.charge || !f.particle.empty();
}

bool any_normalized(const Flags& f) {
  return f.e0 || f.h || f.pi || f.eta || f.lambda || f.d || f.s;
}

/// Config file first, then flags on top.
RunConfig build_config(const std::string& command, const Flags& f) {
  RunConfig c;
  if (!f.config.empty()) c = run_config_from_json(read_json(read_file(f.config)));
  c.command = command;
  if (any_physical(f) && !c.physical && !c.normalized) c.physical = PhysicalInput{};
  if (any_normalized(f) && !c.physical && !c.normalized) c.normalized = NormalizedInput{};
  if (any_physical(f) && !c.physical)
    throw validation_error("physical flags given with a normalized configuration");
  if (any_normalized(f) && !c.normalized)
    throw validation_error("normalized flags given with a physical configuration");
  if (c.physical) {
    auto& p = *c.physical;
    if (!f.particle.empty()) p.particle = f.particle;
    if (f.mass) p.mass = f.mass;
    if (f.charge) p.charge = f.charge;
    if (f.omega) p.omega = f.omega;
    if (f.Hz) p.H_z = f.Hz;
    if (f.H) p.H_wave = f.H;
    if (f.p) p.p_z = f.p;
    if (f.epsilon) p.epsilon = static_cast<int>(*f.epsilon);
  }
  if (c.normalized) {
    auto& n = *c.normalized;
    if (f.e0) n.e0 = f.e0;
    if (f.h) n.h = f.h;
    if (f.pi) n.pi_ = f.pi;
    if (f.eta) n.eta = f.eta;
    if (f.lambda) n.lambda_ = f.lambda;
    if (f.d) n.d = f.d;
    if (f.s) n.s = static_cast<int>(*f.s);
    if (f.epsilon) n.epsilon = static_cast<int>(*f.epsilon);
  }
  if (!f.out.empty()) c.out = f.out;
  if (!f.format.empty()) c.format = f.format;
  if (f.quadrature_order) c.quadrature_order = *f.quadrature_order;
  if (f.fd_order) c.fd_order = *f.fd_order;
  return c;
}

Particle particle_of(const PhysicalInput& p, const PhysicalConstants& k) {
  if (p.particle == "electron") {
    detail::require(!p.mass && !p.charge, "--mass/--charge need --particle custom");
    return Particle::electron(k);
  }
  detail::require(p.particle == "custom", "particle must be electron or custom");
  detail::require(p.mass && p.charge, "custom particle needs --mass and --charge");
  return {*p.mass, *p.charge};
}

struct Resolved {
  NormalizedConfig n;
  PhysicalConfig phys;
  Particle particle;
  std::optional<PairParams> pair;
};

template <class T>
T need(const std::optional<T>& v, const char* what) {
  if (!v) throw validation_error(std::string("missing input: ") + what);
  return *v;
}

Resolved resolve(const RunConfig& c, const PhysicalConstants& k) {
  c.validate();
  Resolved r;
  if (c.physical) {
    const auto& p = *c.physical;
    r.particle = particle_of(p, k);
    r.phys.mass = r.particle.mass;
    r.phys.charge = r.particle.charge;
    r.phys.omega = need(p.omega, "omega");
    r.phys.H_z = need(p.H_z, "Hz");
    r.phys.H_wave = need(p.H_wave, "H");
    r.phys.p_z = need(p.p_z, "p");
    r.phys.epsilon = direction_from_int(p.epsilon);
    r.n = normalize(r.phys, k);
    return r;
  }
  const auto& n = *c.normalized;
  r.particle = Particle::electron(k);
  const double e0 = need(n.e0, "e0");
  const Branch s = branch_from_int(n.s);
  const Direction eps = direction_from_int(n.epsilon);
  double lambda = 0, h = 0;
  if (n.pi_ || n.eta) {
    detail::require(!n.lambda_ && !n.h, "give either (pi, eta) or (lambda, h), not both");
    r.pair = PairParams{need(n.pi_, "pi"), need(n.eta, "eta")};
    const FieldParams fp = fields_from_pair(*r.pair, e0, s);
    h = fp.h();
    lambda = fp.lambda_;
  } else {
    lambda = need(n.lambda_, "lambda (or pi and eta)");
    h = need(n.h, "h (or pi and eta)");
  }
  double d = 0;
  if (n.d) {
    d = *n.d;
  } else if (r.pair) {
    d = PairSystem{*r.pair, e0, s, eps, r.particle, k}.d_star();
  } else {
    throw validation_error("missing input: d");
  }
  detail::require(e0 != 0.0, "E0 must be nonzero");
  r.n = make_normalized(e0, lambda, h, d, s, eps, r.particle, k);
  r.phys = denormalize(r.n, r.particle, k);
  return r;
}

void emit(const RunConfig& c, const json& j, const CsvTable& t) {
  const std::string text = c.format == "csv" ? write_csv(t) : write_json(j);
  if (c.out.empty())
    std::cout << text;
  else
    write_file(c.out, text);
}

json roots_json(const EigenRoots& r) {
  json a = json::array();
  for (int i = 0; i < 3; ++i)
    a.push_back({{"re", r.roots[i].real()}, {"im", r.roots[i].imag()}, {"real", r.real[i]}});
  return a;
}

json state_json(const GroundState& gs) {
  return {{"root", gs.root},       {"energy", gs.energy},    {"p_z", gs.p_z},
          {"d1_im", gs.d1.imag()}, {"d2", gs.d2},            {"log_norm", gs.log_norm},
          {"omega", gs.omega},     {"wave_number", gs.wave_number}};
}

std::vector<GroundState> real_states(const Resolved& r, const PhysicalConstants& k) {
  std::vector<GroundState> out;
  for (double root : solve_cubic(r.n.e0, r.n.lambda_, r.n.h, r.n.s).real_roots())
    out.push_back(build_ground_state(r.n, root, r.particle.mass, k));
  return out;
}

int cmd_normalize(const RunConfig& c, const PhysicalConstants& k) {
  const Resolved r = resolve(c, k);
  json j = {{"normalized", to_json(r.n)}, {"physical", to_json(r.phys)}};
  CsvTable t{{"e0", "lambda", "h", "d", "s", "epsilon", "P", "omega", "Hz", "H", "p", "mass", "charge"}, {}};
  t.add_row({r.n.e0, r.n.lambda_, r.n.h, r.n.d, sign(r.n.s), sign(r.n.epsilon), r.n.big_p,
             r.phys.omega, r.phys.H_z, r.phys.H_wave, r.phys.p_z, r.phys.mass, r.phys.charge});
  emit(c, j, t);
  return 0;
}

int cmd_solve(const RunConfig& c, const PhysicalConstants& k, bool full_report) {
  const Resolved r = resolve(c, k);
  const auto roots = solve_cubic(r.n.e0, r.n.lambda_, r.n.h, r.n.s);
  json states = json::array();
  CsvTable t{{"root", "energy", "p_z", "d2", "residual_rel", "status"}, {}};
  bool all_pass = true;
  for (const auto& gs : real_states(r, k)) {
    const auto fd = certify(gs, r.phys, k, {}, {}, DerivativeMethod::finite_difference, c.fd_order);
    all_pass = all_pass && fd.pass;
    json s = state_json(gs);
    json cert = to_json(fd);
    if (!full_report) cert.erase("scanned");
    s["certification"] = cert;
    if (full_report) {
      const auto an = certify(gs, r.phys, k, {}, {}, DerivativeMethod::analytic);
      all_pass = all_pass && an.pass;
      s["certification_analytic"] = to_json(an);
    }
    states.push_back(s);
    t.add_row({gs.root, gs.energy, gs.p_z, gs.d2, fd.residual_rel, std::string(fd.pass ? "PASS" : "FAIL")});
  }
  json j = {{"config", to_json(r.n)}, {"roots", roots_json(roots)}, {"states", states}};
  emit(c, j, t);
  return all_pass ? 0 : kExitCertification;
}

int cmd_observe(const RunConfig& c, const PhysicalConstants& k, double t, double z) {
  const Resolved r = resolve(c, k);
  QuadratureOptions q;
  q.order = c.quadrature_order;
  const auto states = real_states(r, k);
  json js = json::array();
  for (const auto& gs : states) {
    const auto closed = averages_closed_form(gs, k);
    const auto quad = quadrature_averages(gs, z, t, q);
    js.push_back({{"root", gs.root},
                  {"closed_form", to_json(closed, t, z)},
                  {"quadrature", to_json(quad)},
                  {"py_finding", to_json(compare_py(closed, quad.py, t, z))}});
  }
  json j = {{"config", to_json(r.n)}, {"states", js}};
  CsvTable tab{{"t", "mu_z", "s3"}, {}};
  if (states.size() >= 2) {
    const auto sup = Superposition::balanced(states[0], states[1]);
    const auto grid = beat_time_grid(sup);
    const auto mu = moment_series(sup, grid, r.particle.charge, q);
    const auto s3 = spin_series(sup, grid, q);
    j["superposition"] = {{"roots", {states[0].root, states[1].root}},
                          {"beat_frequency", std::abs(sup.beat_frequency())},
                          {"mu_z", to_json(mu)},
                          {"s3", to_json(s3)}};
    for (std::size_t i = 0; i < grid.size(); ++i) tab.add_row({grid[i], mu.values[i], s3.values[i]});
  }
  emit(c, j, tab);
  return 0;
}

int cmd_resonance(const RunConfig& c, const Flags& f, const PhysicalConstants& k) {
  const Resolved r = resolve(c, k);
  if (!r.pair) throw validation_error("resonance needs --pi and --eta");
  QuadratureOptions q;
  q.order = c.quadrature_order;
  const PairSystem sys{*r.pair, r.n.e0, r.n.s, r.n.epsilon, r.particle, k};
  const auto setup = resonance_setup(sys, q);
  json pairings = json::array();
  for (const auto& p : pairing_report(sys, q)) pairings.push_back(to_json(p));
  const auto scan = spin_flop_scan(sys, log_grid_around(setup.d_star, f.decades, f.grid_points), 1e-9, q);
  json j = {{"setup", to_json(setup)}, {"pairings", pairings}, {"flop_scan", to_json(scan)}};
  emit(c, j, flop_csv(scan));
  return 0;
}

int cmd_tables(const RunConfig& c, const PhysicalConstants& k) {
  json t1 = json::array(), t2 = json::array();
  CsvTable t{{"table", "Hz", "quantity", "computed", "printed", "deviation"}, {}};
  for (const auto& r : table1(k)) {
    t1.push_back({{"Hz", r.H_z}, {"l", r.l}, {"l_printed", r.l_printed}, {"l_deviation", r.l_dev()},
                  {"omega", r.omega}, {"omega_printed", r.omega_printed}, {"omega_deviation", r.omega_dev()}});
    t.add_row({1.0, r.H_z, std::string("l"), r.l, r.l_printed, r.l_dev()});
    t.add_row({1.0, r.H_z, std::string("omega"), r.omega, r.omega_printed, r.omega_dev()});
  }
  for (const auto& r : table2(k)) {
    t2.push_back({{"Hz", r.H_z}, {"omega", r.omega}, {"omega_printed", r.omega_printed},
                  {"omega_deviation", r.omega_dev()}, {"hP", r.hP}, {"hP_small_e0", r.hP_approx},
                  {"hP_printed", r.hP_printed}, {"hP_deviation", r.hP_dev()},
                  {"roots", {r.roots[0], r.roots[1]}}});
    t.add_row({2.0, r.H_z, std::string("omega"), r.omega, r.omega_printed, r.omega_dev()});
    t.add_row({2.0, r.H_z, std::string("hP"), r.hP, r.hP_printed, r.hP_dev()});
  }
  json j = {{"table1", {{"e0", 1.0}, {"rows", t1}}}, {"table2", {{"e0", kTable2E0}, {"rows", t2}}}};
  emit(c, j, t);
  return 0;
}

/// One sweep point. Unphysical points are marked in `status`.
std::vector<CsvCell> sweep_point(RunConfig c, const std::string& axis, double v,
                                 const PhysicalConstants& k, const QuadratureOptions& q) {
  auto& n = *c.normalized;
  if (axis == "d") n.d = v;
  else if (axis == "e0") n.e0 = v;
  else if (axis == "h") n.h = v;
  else if (axis == "eta") n.eta = v;
  else if (axis == "pi") n.pi_ = v;
  std::vector<CsvCell> row{v, std::string("ok"), 0.0, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
  try {
    if (n.e0 && *n.e0 == 0.0) throw validation_error("E0 = 0");
    const Resolved r = resolve(c, k);
    const auto roots = solve_cubic(r.n.e0, r.n.lambda_, r.n.h, r.n.s);
    row[2] = static_cast<double>(roots.real_count());
    for (int i = 0; i < 3; ++i) row[3 + i] = roots.real[i] ? roots.roots[i].real() : kNaN;
    row[6] = r.n.h * r.n.h;
    const auto states = real_states(r, k);
    double worst = 0.0;
    for (const auto& gs : states) {
      const std::vector<Convention> conv{Convention{}};
      worst = std::max(worst, certify(gs, r.phys, k, {}, conv, DerivativeMethod::finite_difference,
                                      c.fd_order).residual_rel);
    }
    row[10] = worst;
    row[11] = std::string(worst < certify_threshold ? "PASS" : "FAIL");
    if (states.size() >= 2) {
      row[7] = states[0].d2;
      row[8] = states[1].d2;
      const auto sup = Superposition::balanced(states[0], states[1]);
      row[9] = oscillation_fit(sup, Observable::magnetic_moment, r.particle.charge, q, kAmplitudeSamples).amplitude;
    } else {
      row[1] = std::string("complex_roots");
    }
  } catch (const domain_error& ex) {
    row[1] = std::string("unphysical");
  } catch (const validation_error& ex) {
    row[1] = std::string("rejected");
  }
  return row;
}

int cmd_sweep(const RunConfig& c, const Flags& f, const PhysicalConstants& k) {
  if (!c.normalized) throw validation_error("sweep needs a normalized configuration");
  const std::string& a = f.axis;
  detail::require(a == "d" || a == "e0" || a == "h" || a == "eta" || a == "pi",
                  "axis must be one of d, e0, h, eta, pi");
  const bool pair_mode = c.normalized->pi_ || c.normalized->eta;
  if ((a == "pi" || a == "eta") && !pair_mode) throw validation_error("axis pi/eta needs --pi and --eta");
  if (a == "h" && pair_mode) throw validation_error("axis h needs (lambda, h) inputs");
  detail::require(f.points >= 2, "sweep needs at least 2 points");
  detail::require(f.scale == "lin" || f.scale == "log", "scale must be lin or log");
  if (f.scale == "log") detail::require(f.from > 0 && f.to > 0, "log sweep needs positive bounds");
  QuadratureOptions q;
  q.order = c.quadrature_order;
  CsvTable t{{a, "status", "real_roots", "root_1", "root_2", "root_3", "h2", "d2_1", "d2_2",
              "mu_amplitude", "residual_rel", "certification"},
             {}};
  json rows = json::array();
  for (int i = 0; i < f.points; ++i) {
    const double u = static_cast<double>(i) / (f.points - 1);
    const double v = f.scale == "log" ? f.from * std::pow(f.to / f.from, u) : f.from + (f.to - f.from) * u;
    auto row = sweep_point(c, a, v, k, q);
    json jr = json::object();
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (std::holds_alternative<double>(row[col])) {
        const double x = std::get<double>(row[col]);
        jr[t.header[col]] = std::isfinite(x) ? json(x) : json(nullptr);
      } else {
        jr[t.header[col]] = std::get<std::string>(row[col]);
      }
    }
    rows.push_back(jr);
    t.add_row(std::move(row));
  }
  emit(c, {{"axis", a}, {"points", rows}}, t);
  return 0;
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON run configuration");
  app->add_option("--out", f.out, "output path (default stdout)");
  app->add_option("--format", f.format, "json or csv");
  app->add_option("--particle", f.particle, "electron or custom");
  app->add_option("--mass", f.mass, "particle mass, g");
  app->add_option("--charge", f.charge, "particle charge, statC");
  app->add_option("--Hz", f.Hz, "constant field, G");
  app->add_option("--H", f.H, "wave amplitude, G");
  app->add_option("--omega", f.omega, "wave angular frequency, rad/s");
  app->add_option("--p", f.p, "longitudinal momentum, g cm/s");
  app->add_option("--epsilon", f.epsilon, "propagation direction, +1 or -1");
  app->add_option("--e0", f.e0, "normalized frequency E0");
  app->add_option("--h", f.h, "normalized wave amplitude");
  app->add_option("--lambda", f.lambda, "normalized Lambda");
  app->add_option("--pi", f.pi, "product of the root pair");
  app->add_option("--eta", f.eta, "sum of the root pair");
  app->add_option("--d", f.d, "envelope curvature, cm^-2");
  app->add_option("--s", f.s, "branch sign, +1 or -1");
  app->add_option("--quadrature-order", f.quadrature_order, "starting Gauss-Hermite order");
  app->add_option("--fd-order", f.fd_order, "finite-difference order (2, 4, 6, 8)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dirac states in a rotating field plus constant magnetic field"};
  app.set_help_flag("--help", "print help");  // -h would clash with --h
  app.require_subcommand(1);
  Flags f;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  const std::pair<const char*, const char*> names[] = {
      {"normalize", "convert between physical and normalized parameters"},
      {"solve", "roots of the cubic and the ground states, with a residual check"},
      {"certify", "residual of each state under every scanned convention"},
      {"observe", "closed-form and quadrature averages at (t, z)"},
      {"resonance", "d*, amplitudes at resonance, pairings and the d scan"},
      {"tables", "computed Table 1 and Table 2 against the printed values"},
      {"sweep", "scan one parameter and tabulate roots and amplitudes"}};
  for (const auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, f);
    subs.emplace_back(name, sub);
  }
  auto* observe = app.get_subcommand("observe");
  observe->add_option("--t", f.t, "time, s");
  observe->add_option("--z", f.z, "longitudinal position, cm");
  auto* res = app.get_subcommand("resonance");
  res->add_option("--grid-points", f.grid_points, "points in the d scan");
  res->add_option("--decades", f.decades, "decades spanned by the d scan");
  auto* sweep = app.get_subcommand("sweep");
  sweep->add_option("--axis", f.axis, "d, e0, h, eta or pi");
  sweep->add_option("--from", f.from, "first value")->required();
  sweep->add_option("--to", f.to, "last value")->required();
  sweep->add_option("--points", f.points, "number of values");
  sweep->add_option("--scale", f.scale, "lin or log");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    const PhysicalConstants k = PhysicalConstants::from_environment();
    const RunConfig c = build_config(command, f);
    if (command == "tables") return cmd_tables(c, k);
    if (command == "normalize") return cmd_normalize(c, k);
    if (command == "solve") return cmd_solve(c, k, false);
    if (command == "certify") return cmd_solve(c, k, true);
    if (command == "observe") return cmd_observe(c, k, f.t, f.z);
    if (command == "resonance") return cmd_resonance(c, f, k);
    if (command == "sweep") return cmd_sweep(c, f, k);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const domain_error& e) {
    std::cerr << "unphysical: " << e.what() << "\n";
    return kExitDomain;
  } catch (const consistency_error& e) {
    std::cerr << "consistency: " << e.what() << "\n";
    return kExitConsistency;
  }
  return kExitValidation;
}
