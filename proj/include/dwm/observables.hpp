#pragma once

// Averages of energy, momentum, spin and magnetic moment. Every closed form
// here has a quadrature counterpart that only samples evaluate().

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dwm/dirac.hpp"
#include "dwm/error.hpp"
#include "dwm/quadrature.hpp"
#include "dwm/spinor.hpp"
#include "dwm/verify.hpp"

namespace dwm {

// ---------------------------------------------------------------------------
// Closed forms for a single state

struct AveragesReport {
  double e_bar;   // erg
  double pz_bar;  // g·cm/s
  double zeta;    // ζ∓, erg
  double dx_dpx;  // erg·s
  double dy_dpy;
  // Inputs of the transverse momentum expressions.
  double d2, hbar, omega, wave_number;
  Branch s;

  /// p̄x = ∓ħd₂cos(Ωt − kz).
  double px(double t, double z) const {
    return upper_minus(s) * hbar * d2 * std::cos(omega * t - wave_number * z);
  }
  /// p̄y as printed, ±iħd₂sin(Ωt − kz). Not real; see compare_py.
  cplx py_printed(double t, double z) const {
    return cplx(0.0, upper_plus(s) * hbar * d2 * std::sin(omega * t - wave_number * z));
  }
};

inline AveragesReport averages_closed_form(const GroundState& gs, const PhysicalConstants& k) {
  const double E = gs.root, h = gs.cfg.h, den = gs.tilt_denominator();
  const double big = (E * E + 1.0) * den * den;
  const double small = h * h * E * E;
  const double hw = k.hbar * gs.omega;
  AveragesReport r;
  r.s = gs.cfg.s;
  r.zeta = 0.5 * hw * (big - small) / (big + small);
  const double um = upper_minus(gs.cfg.s), up = upper_plus(gs.cfg.s);
  const double tilt = gs.d2 * gs.d2 / gs.cfg.d;
  const double eps = sign(gs.cfg.epsilon);
  r.e_bar = gs.energy + um * r.zeta + up * hw * tilt;
  r.pz_bar = gs.p_z + um * eps / k.c * r.zeta + up * hw * eps * tilt / k.c;
  r.dx_dpx = r.dy_dpy = 0.5 * k.hbar;
  r.d2 = gs.d2;
  r.hbar = k.hbar;
  r.omega = gs.omega;
  r.wave_number = gs.wave_number;
  return r;
}

// ---------------------------------------------------------------------------
// Quadrature of single-state averages

struct QuadratureAverages {
  double norm;
  double e_bar, e_shift;    // Ē and Ē − E·norm
  double pz_bar, pz_shift;  // p̄z and p̄z − p·norm
  cplx px, py;
  double x_mean, y_mean;
  double dx, dy, dpx, dpy;
  int order;
  bool converged;
};

namespace detail {

inline std::array<double, 2> to_lab(std::array<double, 2> rot, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {rot[0] * c - rot[1] * s, rot[0] * s + rot[1] * c};
}

inline double transverse_rate(const GroundState& gs, double r) {
  return std::sqrt(gs.cfg.d) + gs.cfg.d * r + std::abs(gs.d1) + std::abs(gs.d2);
}

inline constexpr int kFdOrder = 8;

}  // namespace detail

/// Averages at (z, t) by Gauss–Hermite quadrature. Derivatives are 8th-order
/// central differences of evaluate(); the fast phases e^{−iEt/ħ} and e^{ipz/ħ}
/// are stripped before differentiating in t and z so that Ē − E and p̄z − p
/// are resolved at their own scale.
inline QuadratureAverages quadrature_averages(const GroundState& gs, double z, double t,
                                              const QuadratureOptions& opt = {}) {
  const cplx i(0, 1);
  const double hb = gs.hbar;
  const int fd = detail::kFdOrder;
  const auto center = detail::to_lab(gs.rotating_center(), gs.wave_phase(z, t));

  using Moments = Eigen::Matrix<cplx, 11, 1>;
  auto integrand = [&](double x, double y) -> Moments {
    const Spinor psi = evaluate(gs, {x, y, z, t});
    const double r = std::hypot(x, y);
    const double rate = detail::transverse_rate(gs, r);
    const double step_t = optimal_step(1.0 / (std::abs(gs.omega) * (0.5 + rate * r)), fd);
    const double step_z = optimal_step(1.0 / (std::abs(gs.wave_number) * (0.5 + rate * r)), fd);
    const double step_xy = optimal_step(1.0 / rate, fd);

    const Spinor g = std::exp(i * gs.energy / hb * t) * psi;
    const Spinor dg_t = central_difference(
        [&](double tt) { return (std::exp(i * gs.energy / hb * tt) * evaluate(gs, {x, y, z, tt})).eval(); },
        t, step_t, fd);
    const Spinor gz = std::exp(-i * gs.p_z / hb * z) * psi;
    const Spinor dg_z = central_difference(
        [&](double zz) { return (std::exp(-i * gs.p_z / hb * zz) * evaluate(gs, {x, y, zz, t})).eval(); },
        z, step_z, fd);
    const Spinor dx = central_difference([&](double xx) { return evaluate(gs, {xx, y, z, t}); }, x,
                                         step_xy, fd);
    const Spinor dy = central_difference([&](double yy) { return evaluate(gs, {x, yy, z, t}); }, y,
                                         step_xy, fd);
    const double rho = psi.squaredNorm();
    // a.dot(b) is a†b.
    Moments m;
    m << rho, i * hb * g.dot(dg_t), -i * hb * gz.dot(dg_z), -i * hb * psi.dot(dx),
        -i * hb * psi.dot(dy), x * rho, y * rho, x * x * rho, y * y * rho,
        hb * hb * dx.squaredNorm(), hb * hb * dy.squaredNorm();
    return m;
  };
  // Natural size of each moment, so that vanishing ones (p̄y at Φ = 0) are
  // judged against their scale instead of themselves.
  const double sd = std::sqrt(gs.cfg.d);
  const double tilt = 1.0 + gs.d2 * gs.d2 / gs.cfg.d;
  const double p_t = hb * (sd + std::abs(gs.d2));
  const double len = (1.0 + std::hypot(center[0], center[1]) * sd) / sd;
  Eigen::Matrix<double, 11, 1> unit;
  unit << 1.0, hb * std::abs(gs.omega) * tilt, hb * std::abs(gs.wave_number) * tilt, p_t, p_t,
      len, len, len * len, len * len, p_t * p_t, p_t * p_t;
  auto scaled = [&](double x, double y) -> Moments {
    return integrand(x, y).cwiseQuotient(unit.cast<cplx>());
  };
  const auto res = gauss_hermite_adaptive(scaled, gs.cfg.d, center, opt, 1.0);
  const Moments m = res.value.cwiseProduct(unit.cast<cplx>());

  QuadratureAverages q;
  q.norm = m[0].real();
  q.e_shift = m[1].real();
  q.e_bar = gs.energy * q.norm + q.e_shift;
  q.pz_shift = m[2].real();
  q.pz_bar = gs.p_z * q.norm + q.pz_shift;
  q.px = m[3];
  q.py = m[4];
  q.x_mean = m[5].real();
  q.y_mean = m[6].real();
  q.dx = std::sqrt(std::max(0.0, m[7].real() - q.x_mean * q.x_mean));
  q.dy = std::sqrt(std::max(0.0, m[8].real() - q.y_mean * q.y_mean));
  q.dpx = std::sqrt(std::max(0.0, m[9].real() - std::norm(q.px)));
  q.dpy = std::sqrt(std::max(0.0, m[10].real() - std::norm(q.py)));
  q.order = res.order;
  q.converged = res.converged;
  return q;
}

/// How the printed p̄y relates to the quadrature value.
struct MomentumYFinding {
  cplx quadrature;
  cplx printed;               // ±iħd₂ sin Φ
  double printed_without_i;   // ±ħd₂ sin Φ
  bool matches_printed;
  bool matches_without_i;
  bool matches_printed_times_i;  // i·(±iħd₂ sin Φ) = ∓ħd₂ sin Φ
};

inline MomentumYFinding compare_py(const AveragesReport& closed, cplx quadrature, double t,
                                   double z, double rel_tol = 1e-8) {
  MomentumYFinding f;
  f.quadrature = quadrature;
  f.printed = closed.py_printed(t, z);
  f.printed_without_i = f.printed.imag();
  const double scale = std::max(std::abs(closed.hbar * closed.d2), 1e-300);
  auto close = [&](cplx a, cplx b) { return std::abs(a - b) <= rel_tol * scale; };
  f.matches_printed = close(quadrature, f.printed);
  f.matches_without_i = close(quadrature, cplx(f.printed_without_i, 0.0));
  f.matches_printed_times_i = close(quadrature, cplx(0, 1) * f.printed);
  return f;
}

// ---------------------------------------------------------------------------
// Two-state superpositions

struct Superposition {
  GroundState state1, state2;
  cplx c1, c2;

  static Superposition make(GroundState a, GroundState b, cplx c1, cplx c2) {
    const auto& x = a.cfg;
    const auto& y = b.cfg;
    detail::require(x.e0 == y.e0 && x.lambda_ == y.lambda_ && x.h == y.h && x.d == y.d &&
                        x.s == y.s && x.epsilon == y.epsilon && a.mass == b.mass,
                    "superposed states must share one normalized configuration");
    detail::require(std::abs(std::norm(c1) + std::norm(c2) - 1.0) < 1e-12,
                    "weights must satisfy |c1|^2 + |c2|^2 = 1");
    detail::require(std::abs(a.root - b.root) >= 1e-9,
                    "superposed roots must be distinct (|E1 - E2| >= 1e-9)");
    return {std::move(a), std::move(b), c1, c2};
  }

  /// Equal weights 1/√2.
  static Superposition balanced(GroundState a, GroundState b) {
    const double w = 1.0 / std::sqrt(2.0);
    return make(std::move(a), std::move(b), w, w);
  }

  Spinor evaluate(const SpacePoint& p) const {
    return c1 * dwm::evaluate(state1, p) + c2 * dwm::evaluate(state2, p);
  }

  /// (E1 − E2)/ħ, rad/s.
  double beat_frequency() const { return (state1.energy - state2.energy) / state1.hbar; }

  /// δ = d₂′ − d₂″.
  double tilt_difference() const { return state1.d2 - state2.d2; }
};

struct BilinearValue {
  cplx value;
  double scale;  // Σ|c_i c_j|·‖Ψ_i‖‖OΨ_j‖, the Cauchy–Schwarz bound
  int max_order;
  bool converged;
};

/// Σ_ij c_i* c_j ∫ Ψ_i†(OΨ_j) dxdy at (z, t). Each (i, j) term is integrated on
/// nodes centered on its own product envelope, so widely separated tilts do
/// not starve the cross terms. `op(p, psi)` applies a pointwise operator of
/// typical size `op_scale`, which sets the convergence yardstick.
template <class Op>
BilinearValue transverse_bilinear(const Superposition& sup, double z, double t, const Op& op,
                                  double op_scale, const QuadratureOptions& opt = {}) {
  const std::array<const GroundState*, 2> st{&sup.state1, &sup.state2};
  const std::array<cplx, 2> cf{sup.c1, sup.c2};
  BilinearValue out{0.0, 0.0, 0, true};
  const double d = sup.state1.cfg.d;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const cplx w = std::conj(cf[a]) * cf[b];
      if (w == 0.0) continue;
      const auto ca = st[a]->rotating_center(), cb = st[b]->rotating_center();
      const std::array<double, 2> mid{0.5 * (ca[0] + cb[0]), 0.5 * (ca[1] + cb[1])};
      const auto center = detail::to_lab(mid, st[a]->wave_phase(z, t));
      using Triple = Eigen::Matrix<cplx, 3, 1>;
      auto f = [&](double x, double y) -> Triple {
        const SpacePoint p{x, y, z, t};
        const Spinor bra = dwm::evaluate(*st[a], p);
        const Spinor ket = op(p, dwm::evaluate(*st[b], p));
        Triple v;
        v << bra.dot(ket) / op_scale, bra.squaredNorm(), ket.squaredNorm() / (op_scale * op_scale);
        return v;
      };
      const auto r = gauss_hermite_adaptive(f, d, center, opt, 1.0);
      out.value += w * r.value[0] * op_scale;
      out.scale += std::abs(w) * std::sqrt(r.value[1].real() * r.value[2].real()) * op_scale;
      out.max_order = std::max(out.max_order, r.order);
      out.converged = out.converged && r.converged;
    }
  }
  return out;
}

inline constexpr double kRealTolerance = 1e-9;

namespace detail {

inline double require_real(const BilinearValue& v, const char* what) {
  if (std::abs(v.value.imag()) > kRealTolerance * std::max(std::abs(v.value.real()), 1e-6 * v.scale))
    throw consistency_error(std::string(what) + " has an imaginary part above tolerance");
  return v.value.real();
}

}  // namespace detail

/// μ_z = (q/2)∫(yΨ†α₁Ψ − xΨ†α₂Ψ)dxdy at z = 0, complex result before the
/// reality check.
inline BilinearValue magnetic_moment_raw(const Superposition& sup, double t, double charge,
                                         const QuadratureOptions& opt = {}) {
  static const auto rep = DiracRepresentation::standard();
  auto op = [&](const SpacePoint& p, const Spinor& psi) -> Spinor {
    return (p.y * (rep.alpha[0] * psi) - p.x * (rep.alpha[1] * psi)).eval();
  };
  const double sd = std::sqrt(sup.state1.cfg.d);
  const auto c1 = sup.state1.rotating_center(), c2 = sup.state2.rotating_center();
  const double len = 1.0 / sd + std::max(std::hypot(c1[0], c1[1]), std::hypot(c2[0], c2[1]));
  BilinearValue v = transverse_bilinear(sup, 0.0, t, op, len, opt);
  v.value *= 0.5 * charge;
  v.scale *= 0.5 * std::abs(charge);
  return v;
}

/// μ_z in erg/G.
inline double magnetic_moment(const Superposition& sup, double t, double charge,
                              const QuadratureOptions& opt = {}) {
  return detail::require_real(magnetic_moment_raw(sup, t, charge, opt), "magnetic moment");
}

/// s₃ = −(i/2)ħ∫Ψ†α₁α₂Ψ dxdy at z = 0.
inline BilinearValue spin_z_raw(const Superposition& sup, double t,
                                const QuadratureOptions& opt = {}) {
  static const auto rep = DiracRepresentation::standard();
  static const Mat4 a12 = rep.alpha[0] * rep.alpha[1];
  auto op = [&](const SpacePoint&, const Spinor& psi) -> Spinor { return (a12 * psi).eval(); };
  BilinearValue v = transverse_bilinear(sup, 0.0, t, op, 1.0, opt);
  const double hb = sup.state1.hbar;
  v.value *= cplx(0.0, -0.5 * hb);
  v.scale *= 0.5 * hb;
  return v;
}

/// s₃ in erg·s.
inline double spin_z(const Superposition& sup, double t, const QuadratureOptions& opt = {}) {
  return detail::require_real(spin_z_raw(sup, t, opt), "spin");
}

// ---------------------------------------------------------------------------
// Single-frequency fits a + b·cos(ωt + φ)

struct SingleFrequencyFit {
  double constant = 0;
  double amplitude = 0;
  double omega = 0;
  double phase = 0;
  double rms_residual = 0;

  /// Residual below 1e-6 of the oscillation (or of a vanishing oscillation's
  /// constant background).
  bool single_frequency() const {
    return rms_residual <= 1e-6 * std::max(std::abs(amplitude), 1e-6 * std::abs(constant)) +
                               1e-300;
  }
};

/// Linear least squares on {1, cos ωt, sin ωt} at fixed ω.
inline SingleFrequencyFit fit_at_frequency(std::span<const double> t, std::span<const double> v,
                                           double omega) {
  detail::require(t.size() == v.size() && t.size() >= 4, "fit needs at least 4 samples");
  const auto n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    A(r, 0) = 1.0;
    A(r, 1) = std::cos(omega * t[r]);
    A(r, 2) = std::sin(omega * t[r]);
    b[r] = v[r];
  }
  const Eigen::Vector3d x = A.colPivHouseholderQr().solve(b);
  SingleFrequencyFit f;
  f.omega = omega;
  f.constant = x[0];
  f.amplitude = std::hypot(x[1], x[2]);
  f.phase = std::atan2(-x[2], x[1]);
  f.rms_residual = std::sqrt((A * x - b).squaredNorm() / static_cast<double>(n));
  return f;
}

/// Scans ω over guess·(1 ± halfwidth), then refines by golden section on the
/// fit residual.
inline SingleFrequencyFit fit_single_frequency(std::span<const double> t, std::span<const double> v,
                                               double omega_guess, double halfwidth = 0.05,
                                               int scan_points = 81) {
  detail::require(omega_guess > 0, "frequency guess must be positive");
  const double lo = omega_guess * (1.0 - halfwidth), hi = omega_guess * (1.0 + halfwidth);
  const double step = (hi - lo) / (scan_points - 1);
  auto rms = [&](double w) { return fit_at_frequency(t, v, w).rms_residual; };
  int best = 0;
  double best_r = rms(lo);
  for (int k = 1; k < scan_points; ++k) {
    const double r = rms(lo + k * step);
    if (r < best_r) {
      best_r = r;
      best = k;
    }
  }
  double a = lo + std::max(0, best - 1) * step;
  double b = lo + std::min(scan_points - 1, best + 1) * step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = rms(x1), f2 = rms(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * omega_guess; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = rms(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = rms(x2);
    }
  }
  return fit_at_frequency(t, v, 0.5 * (a + b));
}

enum class Observable { magnetic_moment, spin };

struct ObservableSeries {
  Observable observable;
  std::vector<double> times;   // s
  std::vector<double> values;  // erg/G or erg·s
  SingleFrequencyFit fit;

  double const_part() const { return fit.constant; }
  double osc_amplitude() const { return fit.amplitude; }
  double osc_freq() const { return fit.omega; }
};

using MomentSeries = ObservableSeries;

/// `periods` beat periods 2πħ/|E1 − E2| with `per_period` samples each.
inline std::vector<double> beat_time_grid(const Superposition& sup, int periods = 3,
                                          int per_period = 16) {
  const double period = 2.0 * std::numbers::pi / std::abs(sup.beat_frequency());
  const int n = periods * per_period;
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(k)] = period * k / per_period;
  return t;
}

inline double observable_value(const Superposition& sup, Observable o, double t, double charge,
                               const QuadratureOptions& opt) {
  return o == Observable::magnetic_moment ? magnetic_moment(sup, t, charge, opt)
                                          : spin_z(sup, t, opt);
}

/// Samples the observable on t_grid and fits a + b·cos(ωt + φ) with ω free
/// around |E1 − E2|/ħ. Throws consistency_error on multi-frequency content.
inline ObservableSeries observable_series(const Superposition& sup, Observable o,
                                          std::span<const double> t_grid, double charge,
                                          const QuadratureOptions& opt = {}) {
  const double w0 = std::abs(sup.beat_frequency());
  const double period = 2.0 * std::numbers::pi / w0;
  detail::require(t_grid.size() >= 48, "series needs at least 48 samples");
  const double span = t_grid.back() - t_grid.front();
  detail::require(span >= 3.0 * period * (1.0 - 1.0 / 16.0) - 1e-12 * period,
                  "series must span at least 3 beat periods");
  detail::require(static_cast<double>(t_grid.size()) >= 16.0 * span / period,
                  "series needs at least 16 samples per beat period");
  ObservableSeries s;
  s.observable = o;
  s.times.assign(t_grid.begin(), t_grid.end());
  s.values.reserve(t_grid.size());
  for (double t : t_grid) s.values.push_back(observable_value(sup, o, t, charge, opt));
  const bool silent = std::abs(sup.c1) == 0.0 || std::abs(sup.c2) == 0.0;
  s.fit = silent ? fit_at_frequency(s.times, s.values, w0)
                 : fit_single_frequency(s.times, s.values, w0);
  if (!s.fit.single_frequency())
    throw consistency_error("multi-frequency content: fit residual above 1e-6 of amplitude");
  return s;
}

inline MomentSeries moment_series(const Superposition& sup, std::span<const double> t_grid,
                                  double charge, const QuadratureOptions& opt = {}) {
  return observable_series(sup, Observable::magnetic_moment, t_grid, charge, opt);
}

inline ObservableSeries spin_series(const Superposition& sup, std::span<const double> t_grid,
                                    const QuadratureOptions& opt = {}) {
  return observable_series(sup, Observable::spin, t_grid, 0.0, opt);
}

/// Constant and oscillation amplitude over one beat period at the known beat
/// frequency; the cheap path used by scans.
inline SingleFrequencyFit oscillation_fit(const Superposition& sup, Observable o, double charge,
                                          const QuadratureOptions& opt = {}, int samples = 16) {
  const double w0 = std::abs(sup.beat_frequency());
  const double period = 2.0 * std::numbers::pi / w0;
  std::vector<double> t(static_cast<std::size_t>(samples)), v(t.size());
  for (int k = 0; k < samples; ++k) {
    t[static_cast<std::size_t>(k)] = period * k / samples;
    v[static_cast<std::size_t>(k)] = observable_value(sup, o, t[static_cast<std::size_t>(k)], charge, opt);
  }
  return fit_at_frequency(t, v, w0);
}

// ---------------------------------------------------------------------------
// Constant part of μ_z

struct NullingReport {
  double mu_11;  // μ_z of state 1 alone
  double mu_22;
  /// |c1| at which |c1|²μ₁₁ + (1 − |c1|²)μ₂₂ = 0, when it lies in (0, 1).
  std::optional<double> null_c1_abs;
  /// Grid scan over (|c1|, arg c2): smallest |constant part| relative to
  /// max(|μ₁₁|, |μ₂₂|) and where it occurred.
  double min_relative_constant;
  double at_c1_abs;
  double at_phase;
};

inline double single_state_moment(const GroundState& gs, double charge,
                                  const QuadratureOptions& opt = {}) {
  static const auto rep = DiracRepresentation::standard();
  const auto center = gs.rotating_center();
  auto f = [&](double x, double y) -> cplx {
    const Spinor psi = evaluate(gs, {x, y, 0.0, 0.0});
    return psi.dot(y * (rep.alpha[0] * psi) - x * (rep.alpha[1] * psi));
  };
  return 0.5 * charge * gauss_hermite_adaptive(f, gs.cfg.d, center, opt).value.real();
}

inline NullingReport constant_part_scan(const GroundState& a, const GroundState& b, double charge,
                                        int magnitudes = 9, int phases = 4,
                                        const QuadratureOptions& opt = {}) {
  NullingReport r;
  r.mu_11 = single_state_moment(a, charge, opt);
  r.mu_22 = single_state_moment(b, charge, opt);
  const double denom = r.mu_22 - r.mu_11;
  if (denom != 0.0) {
    const double c1sq = r.mu_22 / denom;
    if (c1sq > 0.0 && c1sq < 1.0) r.null_c1_abs = std::sqrt(c1sq);
  }
  const double ref = std::max(std::abs(r.mu_11), std::abs(r.mu_22));
  r.min_relative_constant = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= magnitudes; ++m) {
    const double c1 = static_cast<double>(m) / (magnitudes + 1);
    for (int p = 0; p < phases; ++p) {
      const double ph = 2.0 * std::numbers::pi * p / phases;
      const auto sup = Superposition::make(a, b, c1, std::polar(std::sqrt(1.0 - c1 * c1), ph));
      const double rel = std::abs(oscillation_fit(sup, Observable::magnetic_moment, charge, opt).constant) / ref;
      if (rel < r.min_relative_constant) {
        r.min_relative_constant = rel;
        r.at_c1_abs = c1;
        r.at_phase = ph;
      }
    }
  }
  return r;
}

}  // namespace dwm
