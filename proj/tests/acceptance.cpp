// Acceptance run: one PASS/FAIL line per criterion with its runtime, followed
// by indented details. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dwm/dwm.hpp"
#include "support.hpp"

using namespace dwm;

namespace {

const PhysicalConstants K = PhysicalConstants::codata2018();
const Particle E = Particle::electron(K);

struct Outcome {
  bool pass = true;
  std::ostringstream log;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      log << "    failed: " << what << "\n";
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// ---------------------------------------------------------------------------

void exactness(Outcome& o, double& limit) {
  limit = 30.0;
  std::mt19937_64 rng(101);
  const std::vector<Convention> standard{Convention{}};
  double worst_fd = 0.0, worst_an = 0.0;
  int states = 0, min_samples = 1 << 30;
  for (int i = 0; i < 20; ++i) {
    const auto rs = dwm::testing::random_state(rng, K);
    for (double root : rs.roots) {
      const auto gs = build_ground_state(rs.cfg, root, E.mass, K);
      const auto fd = certify(gs, rs.phys, K, {}, standard);
      const auto an = certify(gs, rs.phys, K, {}, standard, DerivativeMethod::analytic);
      worst_fd = std::max(worst_fd, fd.residual_rel);
      worst_an = std::max(worst_an, an.residual_rel);
      min_samples = std::min(min_samples, fd.samples);
      ++states;
    }
  }
  o.check(worst_fd < 1e-8, "finite-difference residual < 1e-8");
  o.check(worst_an < 1e-12, "analytic residual < 1e-12");
  o.check(min_samples >= 50, ">= 50 sample points");

  BuildOptions loose;
  loose.require_root = false;
  double weakest = 1e300;
  for (int i = 0; i < 5; ++i) {
    const auto rs = dwm::testing::random_state(rng, K);
    const auto gs = build_ground_state(rs.cfg, rs.roots[i % 3] + 1e-3, E.mass, K, loose);
    weakest = std::min(weakest, certify(gs, rs.phys, K, {}, standard).residual_rel);
  }
  o.check(weakest > 1e-4, "perturbed root residual > 1e-4");
  o.log << "    " << states << " states from 20 parameter sets, " << min_samples
        << " points each; max residual fd " << fmt("%.2e", worst_fd) << ", analytic "
        << fmt("%.2e", worst_an) << "; 1e-3 root shift gives >= " << fmt("%.2e", weakest) << "\n";
}

void table_one(Outcome& o, double& limit) {
  limit = 1.0;
  for (const auto& r : table1(K)) {
    o.check(std::abs(r.l_dev()) < 5e-3, "l at H_z = " + fmt("%g", r.H_z));
    o.check(std::abs(r.omega_dev()) < 5e-3, "omega at H_z = " + fmt("%g", r.H_z));
    o.log << "    H_z " << fmt("%-8g", r.H_z) << " l " << fmt("%.4e", r.l) << " ("
          << fmt("%+.2e", r.l_dev()) << ")  omega " << fmt("%.4e", r.omega) << " Hz ("
          << fmt("%+.2e", r.omega_dev()) << ")\n";
  }
}

void table_two(Outcome& o, double&) {
  const auto rows = table2(K);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    o.log << "    H_z " << fmt("%-8g", r.H_z) << " omega " << fmt("%.4e", r.omega) << " Hz vs "
          << fmt("%.3e", r.omega_printed) << " (" << fmt("%+.2f%%", 100 * r.omega_dev())
          << ")  hP " << fmt("%.4e", r.hP) << " vs " << fmt("%.3e", r.hP_printed) << " ("
          << fmt("%+.2f%%", 100 * r.hP_dev()) << ")" << (i < 2 ? "  [reported only]" : "")
          << "\n";
  }
  o.check(std::abs(rows[2].omega_dev()) <= 0.02, "omega at 4e5 G within 2% of 2.82e14 Hz");
}

void cubic_integrity(Outcome& o, double& limit) {
  limit = 5.0;
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_vieta = 0.0, worst_res = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double scale = std::pow(10.0, 2 * u(rng));
    const Cubic p = i % 2 ? ground_state_cubic(scale * u(rng), 3 * u(rng), 2 * u(rng),
                                               u(rng) < 0 ? Branch::negative : Branch::positive)
                          : Cubic{scale * u(rng), scale * u(rng), scale * u(rng)};
    const auto r = solve_cubic(p);
    const cplx x = r.roots[0], y = r.roots[1], z = r.roots[2];
    const double m = std::max({1.0, std::abs(x), std::abs(y), std::abs(z)});
    worst_vieta = std::max({worst_vieta, std::abs(x + y + z + p.a) / m,
                            std::abs(x * y + y * z + z * x - p.b) / (m * m),
                            std::abs(x * y * z + p.c) / (m * m * m)});
    for (const auto& w : r.roots) worst_res = std::max(worst_res, scaled_residual(p, w));
  }
  double worst_pair = 0.0;
  int pairs = 0;
  while (pairs < 2000) {
    const Branch s = u(rng) < 0 ? Branch::negative : Branch::positive;
    const double e0 = 1.5 * u(rng);
    const PairParams pp = PairParams::from_roots(2 * u(rng), 2 * u(rng));
    if (std::abs(pp.pi_) < 1e-2 || std::abs(e0) < 1e-3) continue;
    const FieldParams f = fields_from_pair(pp, e0, s);
    if (!f.physical()) continue;
    const auto r = solve_cubic(e0, f.lambda_, f.h(), s);
    for (double w : pp.roots()) {
      double best = 1e300;
      for (const auto& x : r.roots) best = std::min(best, std::abs(x - w));
      worst_pair = std::max(worst_pair, best / std::max(1.0, std::abs(w)));
    }
    ++pairs;
  }
  o.check(worst_vieta < 1e-10, "Vieta identities < 1e-10");
  o.check(worst_res < 1e-10, "per-root residual < 1e-10");
  o.check(worst_pair < 1e-10, "pair round trip < 1e-10");
  o.log << "    10000 draws: Vieta " << fmt("%.2e", worst_vieta) << ", residual "
        << fmt("%.2e", worst_res) << "; " << pairs << " pair round trips: "
        << fmt("%.2e", worst_pair) << "\n";
}

std::vector<GroundState> twenty_states(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GroundState> out;
  for (int i = 0; i < 20; ++i) {
    const auto rs = dwm::testing::random_state(rng, K);
    out.push_back(build_ground_state(rs.cfg, rs.roots[i % 3], E.mass, K));
  }
  return out;
}

void normalization(Outcome& o, double&) {
  double worst_norm = 0.0, worst_unc = 0.0;
  bool converged = true;
  for (const auto& gs : twenty_states(105)) {
    const auto q = quadrature_averages(gs, 0.0, 0.3 / gs.omega);
    converged = converged && q.converged;
    worst_norm = std::max(worst_norm, std::abs(q.norm - 1.0));
    worst_unc = std::max({worst_unc, rel(q.dx * q.dpx, 0.5 * K.hbar), rel(q.dy * q.dpy, 0.5 * K.hbar)});
  }
  o.check(converged, "quadrature converged");
  o.check(worst_norm < 1e-10, "norm within 1e-10");
  o.check(worst_unc < 1e-10, "uncertainty products within 1e-10 of hbar/2");
  o.log << "    20 states: |norm - 1| <= " << fmt("%.2e", worst_norm)
        << ", uncertainty products within " << fmt("%.2e", worst_unc) << " of hbar/2\n";
}

void closed_forms(Outcome& o, double&) {
  double e_rel = 0.0, p_rel = 0.0, e_shift = 0.0, p_shift = 0.0, px = 0.0, py_im = 0.0;
  int printed = 0, without_i = 0, times_i = 0;
  for (const auto& gs : twenty_states(106)) {
    const double t = 0.61 / gs.omega;
    const auto a = averages_closed_form(gs, K);
    const auto q = quadrature_averages(gs, 0.0, t);
    e_rel = std::max(e_rel, rel(q.e_bar, a.e_bar));
    p_rel = std::max(p_rel, rel(q.pz_bar, a.pz_bar));
    e_shift = std::max(e_shift, std::abs(q.e_shift - (a.e_bar - gs.energy)) / (K.hbar * std::abs(gs.omega)));
    p_shift = std::max(p_shift, std::abs(q.pz_shift - (a.pz_bar - gs.p_z)) /
                                    (K.hbar * std::abs(gs.wave_number)));
    const double pscale = K.hbar * (std::abs(gs.d2) + std::sqrt(gs.cfg.d));
    px = std::max(px, std::abs(q.px - cplx(a.px(t, 0.0))) / pscale);
    py_im = std::max(py_im, std::abs(q.py.imag()) / pscale);
    const auto f = compare_py(a, q.py, t, 0.0);
    printed += f.matches_printed;
    without_i += f.matches_without_i;
    times_i += f.matches_printed_times_i;
  }
  o.check(e_rel < 1e-8 && p_rel < 1e-8, "E and p_z averages within 1e-8 relative");
  o.check(e_shift < 1e-8 && p_shift < 1e-8, "E and p_z shifts within 1e-8 of their scale");
  o.check(px < 1e-8, "p_x within 1e-8");
  o.check(py_im < 1e-9, "quadrature p_y real to 1e-9");
  o.log << "    20 states: E " << fmt("%.1e", e_rel) << ", p_z " << fmt("%.1e", p_rel)
        << " relative; shifts " << fmt("%.1e", e_shift) << " / " << fmt("%.1e", p_shift)
        << " of hbar*Omega / hbar*k; p_x " << fmt("%.1e", px) << "\n"
        << "    finding p_y: quadrature is real (|Im| <= " << fmt("%.1e", py_im)
        << " of scale); matches printed " << printed << "/20, printed without i " << without_i
        << "/20, i * printed " << times_i << "/20\n";
}

void frequency(Outcome& o, double&) {
  std::mt19937_64 rng(107);
  double worst = 0.0, agree = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto rs = dwm::testing::random_state(rng, K);
    const auto sup = Superposition::balanced(build_ground_state(rs.cfg, rs.roots[i % 3], E.mass, K),
                                             build_ground_state(rs.cfg, rs.roots[(i + 1) % 3], E.mass, K));
    const auto grid = beat_time_grid(sup);
    const double w = std::abs(sup.beat_frequency());
    const auto mu = moment_series(sup, grid, E.charge);
    const auto s3 = spin_series(sup, grid);
    worst = std::max({worst, rel(mu.osc_freq(), w), rel(s3.osc_freq(), w)});
    agree = std::max(agree, rel(mu.osc_freq(), s3.osc_freq()));
  }
  o.check(worst < 1e-3, "fitted frequencies within 1e-3 of |E1 - E2|/hbar");
  o.log << "    10 superpositions: max deviation " << fmt("%.2e", worst)
        << ", mu_z vs s3 frequency " << fmt("%.2e", agree) << "\n";
}

std::vector<PairSystem> five_systems(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PairSystem> out;
  for (int i = 0; i < 5; ++i) out.push_back(dwm::testing::random_pair_system(rng, K));
  return out;
}

void resonance_shape(Outcome& o, double&) {
  double worst = 0.0;
  bool monotone = true, no_extremum = true, peak = true;
  for (const auto& sys : five_systems(108)) {
    const auto m = maximize_moment_amplitude(sys);
    worst = std::max(worst, m.relative_error);
    const auto f = spin_flop_scan(sys, log_grid_around(sys.d_star(), 3.0, 13));
    monotone = monotone && f.s3_monotone;
    no_extremum = no_extremum && !f.s3_interior_extremum;
    peak = peak && f.mu_interior_maximum && f.mu_peak_dominates;
    o.log << "    s " << fmt("%+.0f", sign(sys.s)) << " d* " << fmt("%.4e", m.d_star)
          << " numeric " << fmt("%.4e", m.d_numeric) << " (" << fmt("%.1e", m.relative_error)
          << ")  mu_z peak on grid " << (f.mu_interior_maximum && f.mu_peak_dominates ? "yes" : "no")
          << ", s3 monotone " << (f.s3_monotone ? "yes" : "no") << "\n";
  }
  o.check(worst < 1e-4, "numeric maximum within 1e-4 of d*");
  o.check(monotone && no_extremum, "s3 amplitude has no interior extremum");
  o.check(peak, "mu_z amplitude peaks inside the grid at d*");
}

void amplitude_audit(Outcome& o, double&) {
  double worst = 0.0;
  for (const auto& sys : five_systems(109)) {
    const auto r = resonance_setup(sys);
    worst = std::max(worst, r.order_doubling_change);
    o.log << "    s " << fmt("%+.0f", sign(r.s)) << " Pi " << fmt("%+.3f", r.pair.pi_) << " eta "
          << fmt("%+.3f", r.pair.eta) << " E0 " << fmt("%.3f", r.e0) << "  empirical "
          << fmt("%.6e", r.amplitude_empirical_mu) << " mu";
    if (r.ratio)
      o.log << "  printed/empirical " << fmt("%+.10f", *r.ratio) << "  mirrored/empirical "
            << fmt("%+.10f", *r.ratio_mirrored);
    else
      o.log << "  printed formula undefined: " << r.closed_form_note;
    o.log << "  doubling " << fmt("%.1e", r.order_doubling_change) << "\n";
  }
  o.check(worst < 1e-9, "order doubling changes amplitude < 1e-9");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&, double&)> run;
  };
  const std::vector<Criterion> all{
      {1, "exactness certification", exactness},
      {2, "Table 1 reproduction", table_one},
      {3, "Table 2 partial reproduction", table_two},
      {4, "cubic integrity", cubic_integrity},
      {5, "normalization and uncertainty", normalization},
      {6, "closed form vs quadrature", closed_forms},
      {7, "oscillation frequency", frequency},
      {8, "resonance shape", resonance_shape},
      {9, "amplitude formula audit", amplitude_audit},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    double limit = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o, limit);
    } catch (const std::exception& ex) {
      o.check(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0.0) o.check(secs < limit, "runtime below " + fmt("%g", limit) + " s");
    failed += !o.pass;
    std::printf("%s  criterion %d  %-32s %8.3f s\n%s", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.log.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
