#pragma once

// Resonance in the constant field: the d that maximizes the μ_z oscillation
// amplitude of a two-state superposition, the printed amplitude formulas, and
// the moment-versus-spin comparison over d.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dwm/eigen.hpp"
#include "dwm/error.hpp"
#include "dwm/observables.hpp"
#include "dwm/spinor.hpp"
#include "dwm/units.hpp"

namespace dwm {

/// (1/d)·exp(−δ²/2d).
inline double envelope_factor(double d, double delta) {
  detail::require(d > 0.0, "envelope curvature d must be positive");
  return std::exp(-delta * delta / (2.0 * d)) / d;
}

/// d* = (d₂′ − d₂″)²/2.
inline double extremal_d(double d2_1, double d2_2) {
  const double delta = d2_1 - d2_2;
  if (std::abs(delta) <= 1e-12 * std::max(std::abs(d2_1), std::abs(d2_2)) || delta == 0.0)
    throw domain_error("degenerate resonance: equal envelope tilts");
  return 0.5 * delta * delta;
}

inline double extremal_d(const GroundState& a, const GroundState& b) {
  detail::require(a.cfg.e0 == b.cfg.e0 && a.cfg.h == b.cfg.h && a.cfg.s == b.cfg.s,
                  "states must share E0, h and branch");
  return extremal_d(a.d2, b.d2);
}

struct MaximumResult {
  double x;
  double value;
  int evaluations;
};

/// Golden-section maximization of f over [lo, hi] in log x. Assumes one
/// interior maximum.
inline MaximumResult golden_section_max_log(const std::function<double(double)>& f, double lo,
                                            double hi, double rel_tol = 1e-9) {
  detail::require(lo > 0.0 && hi > lo, "search interval must satisfy 0 < lo < hi");
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::log(lo), b = std::log(hi);
  double u1 = b - g * (b - a), u2 = a + g * (b - a);
  double f1 = f(std::exp(u1)), f2 = f(std::exp(u2));
  int n = 2;
  while (b - a > rel_tol) {
    if (f1 > f2) {
      b = u2;
      u2 = u1;
      f2 = f1;
      u1 = b - g * (b - a);
      f1 = f(std::exp(u1));
    } else {
      a = u1;
      u1 = u2;
      f1 = f2;
      u2 = a + g * (b - a);
      f2 = f(std::exp(u2));
    }
    ++n;
  }
  const double x = std::exp(0.5 * (a + b));
  return {x, f(x), n + 1};
}

// ---------------------------------------------------------------------------
// Printed amplitude formulas

/// R∓ = sqrt(−Π³(Π ∓ 𝓔0η + 𝓔0²) / ((Π³ ± Πη𝓔0 + 𝓔0²)(η² − 4Π)³)).
inline double amplitude_radical(const PairParams& pair, double e0, Branch s) {
  const double P = pair.pi_, eta = pair.eta;
  const double um = upper_minus(s), up = upper_plus(s);
  const double disc = eta * eta - 4.0 * P;
  if (disc <= 0.0) throw domain_error("outside amplitude formula domain: eta^2 - 4 pi <= 0");
  const double num = -P * P * P * (P + um * e0 * eta + e0 * e0);
  const double den = (P * P * P + up * P * eta * e0 + e0 * e0) * disc * disc * disc;
  if (den == 0.0) throw domain_error("outside amplitude formula domain: vanishing denominator");
  const double q = num / den;
  if (q < 0.0) throw domain_error("outside amplitude formula domain: negative radicand");
  return std::sqrt(q);
}

/// Bracket of the amplitude formula, the three printed terms.
inline double amplitude_bracket(const PairParams& pair, double e0, Branch s) {
  const double P = pair.pi_, eta = pair.eta;
  if (s == Branch::negative) return -2.0 * P + 2.0 * e0 * eta - 2.0 * e0 * e0;
  return 2.0 * P - 2.0 * eta * e0 - eta * eta - 2.0 * e0 * e0;
}

/// A∓ in units of the particle magneton, as printed:
///   A∓ = 4R∓/(𝓔0·e¹) · bracket.
inline double amplitude_closed_form(const PairParams& pair, double e0, Branch s) {
  detail::require(e0 != 0.0, "E0 must be nonzero");
  detail::require(pair.pi_ < 0.0, "amplitude formula needs pi < 0");
  return 4.0 * amplitude_radical(pair, e0, s) / (e0 * std::exp(1.0)) *
         amplitude_bracket(pair, e0, s);
}

/// The upper-branch amplitude obtained from the lower-branch formula by the
/// mirror 𝓔 → −𝓔 (Π unchanged, η → −η). Equals amplitude_closed_form for
/// s = −1.
inline double amplitude_mirrored(const PairParams& pair, double e0, Branch s) {
  if (s == Branch::negative) return amplitude_closed_form(pair, e0, s);
  return amplitude_closed_form({pair.pi_, -pair.eta}, e0, Branch::negative);
}

// ---------------------------------------------------------------------------
// States parameterized by (Π, η, 𝓔0, s, d)

struct PairSystem {
  PairParams pair;
  double e0;
  Branch s;
  Direction epsilon = Direction::forward;
  Particle particle;
  PhysicalConstants constants;

  FieldParams fields() const { return fields_from_pair(pair, e0, s); }

  NormalizedConfig config(double d) const {
    const FieldParams f = fields();
    return make_normalized(e0, f.lambda_, f.h(), d, s, epsilon, particle, constants);
  }

  /// The two states with roots 𝓔1 > 𝓔2 at curvature d.
  std::array<GroundState, 2> states(double d) const {
    const auto cfg = config(d);
    const auto r = pair.roots();
    return {build_ground_state(cfg, r[0], particle.mass, constants),
            build_ground_state(cfg, r[1], particle.mass, constants)};
  }

  /// Envelope tilts d₂ of the two states; independent of d.
  std::array<double, 2> tilts() const {
    const auto st = states(1.0 / (constants.compton_length(particle.mass) *
                                  constants.compton_length(particle.mass)));
    return {st[0].d2, st[1].d2};
  }

  double d_star() const {
    const auto t = tilts();
    return extremal_d(t[0], t[1]);
  }

  Superposition superposition(double d) const {
    auto st = states(d);
    return Superposition::balanced(std::move(st[0]), std::move(st[1]));
  }
};

struct OscillationAmplitudes {
  double mu;  // erg/G
  double s3;  // erg·s
};

inline constexpr int kAmplitudeSamples = 8;

inline double moment_amplitude(const PairSystem& sys, double d, const QuadratureOptions& opt = {}) {
  return oscillation_fit(sys.superposition(d), Observable::magnetic_moment, sys.particle.charge,
                         opt, kAmplitudeSamples)
      .amplitude;
}

inline double spin_amplitude(const PairSystem& sys, double d, const QuadratureOptions& opt = {}) {
  return oscillation_fit(sys.superposition(d), Observable::spin, 0.0, opt, kAmplitudeSamples)
      .amplitude;
}

struct ResonanceSetup {
  PairParams pair;
  double e0;
  Branch s;
  double d_star;
  double d2_1, d2_2;
  double root_1, root_2;
  double field_star;            // |H_z| at d*, G
  double amplitude_empirical;   // erg/G
  double amplitude_empirical_mu;  // in magnetons
  std::optional<double> amplitude_closed;  // magnetons; empty outside the formula domain
  std::optional<double> amplitude_mirrored;  // magnetons
  std::string closed_form_note;
  /// closed / empirical, when both exist.
  std::optional<double> ratio;
  std::optional<double> ratio_mirrored;
  /// |A(order 2n) − A(order n)|/A at d*.
  double order_doubling_change;
};

inline ResonanceSetup resonance_setup(const PairSystem& sys, const QuadratureOptions& opt = {}) {
  ResonanceSetup r;
  r.pair = sys.pair;
  r.e0 = sys.e0;
  r.s = sys.s;
  const auto t = sys.tilts();
  r.d2_1 = t[0];
  r.d2_2 = t[1];
  const auto roots = sys.pair.roots();
  r.root_1 = roots[0];
  r.root_2 = roots[1];
  r.d_star = extremal_d(t[0], t[1]);
  r.field_star = field_from_curvature(r.d_star, sys.particle.charge, sys.constants);
  QuadratureOptions fixed = opt;
  fixed.adaptive = false;
  fixed.order = std::max(opt.order, 48);
  const double a1 = moment_amplitude(sys, r.d_star, fixed);
  fixed.order *= 2;
  const double a2 = moment_amplitude(sys, r.d_star, fixed);
  r.amplitude_empirical = a2;
  r.order_doubling_change = std::abs(a2 - a1) / std::abs(a2);
  r.amplitude_empirical_mu = a2 / sys.constants.magneton(sys.particle.mass, sys.particle.charge);
  try {
    r.amplitude_closed = amplitude_closed_form(sys.pair, sys.e0, sys.s);
    r.ratio = *r.amplitude_closed / r.amplitude_empirical_mu;
    r.amplitude_mirrored = amplitude_mirrored(sys.pair, sys.e0, sys.s);
    r.ratio_mirrored = *r.amplitude_mirrored / r.amplitude_empirical_mu;
  } catch (const std::exception& ex) {
    r.closed_form_note = ex.what();
  }
  return r;
}

// ---------------------------------------------------------------------------
// Root pairings

struct PairingReport {
  int first, second;  // indices into (𝓔1, 𝓔2, 𝓔3)
  PairParams pair;
  bool pi_negative;
  std::optional<double> d_star;
  std::optional<double> amplitude_closed;
  std::optional<double> amplitude_empirical_mu;
  std::string note;
  /// Π < 0, finite d* and the printed formula defined.
  bool admissible() const { return pi_negative && d_star && amplitude_closed; }
};

/// All three pairings of the roots of the cubic defined by (Π, η, 𝓔0, s).
inline std::vector<PairingReport> pairing_report(const PairSystem& sys,
                                                 const QuadratureOptions& opt = {}) {
  const auto r12 = sys.pair.roots();
  const std::array<double, 3> roots{r12[0], r12[1], third_root(sys.pair, sys.e0, sys.s)};
  std::vector<PairingReport> out;
  for (auto [i, j] : std::array<std::pair<int, int>, 3>{{{0, 1}, {0, 2}, {1, 2}}}) {
    PairingReport p;
    p.first = i;
    p.second = j;
    const double a = std::max(roots[i], roots[j]), b = std::min(roots[i], roots[j]);
    p.pair = PairParams::from_roots(a, b);
    p.pi_negative = p.pair.pi_ < 0.0;
    try {
      PairSystem other = sys;
      other.pair = p.pair;
      p.d_star = other.d_star();
      p.amplitude_empirical_mu = moment_amplitude(other, *p.d_star, opt) /
                                 sys.constants.magneton(sys.particle.mass, sys.particle.charge);
      p.amplitude_closed = amplitude_closed_form(p.pair, sys.e0, sys.s);
    } catch (const std::exception& ex) {
      p.note = ex.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scan over d

struct FlopScan {
  std::vector<double> d;
  std::vector<double> mu_amplitude;
  std::vector<double> s3_amplitude;
  double d_star;
  std::size_t mu_argmax;
  bool mu_interior_maximum;   // grid argmax strictly inside the grid
  bool mu_peak_dominates;     // value at the point nearest d* is the grid max
  bool s3_monotone;           // nondecreasing in d within noise
  bool s3_interior_extremum;
  double noise;
};

/// Log-spaced grid of `points` values over `decades` decades centered on d*.
inline std::vector<double> log_grid_around(double d_star, double decades = 3.0, int points = 13) {
  detail::require(points >= 3 && decades > 0.0, "grid needs >= 3 points and positive span");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k)
    g[static_cast<std::size_t>(k)] =
        d_star * std::pow(10.0, decades * (static_cast<double>(k) / (points - 1) - 0.5));
  return g;
}

inline FlopScan spin_flop_scan(const PairSystem& sys, std::vector<double> d_grid,
                               double noise = 1e-9, const QuadratureOptions& opt = {}) {
  detail::require(d_grid.size() >= 3, "d grid needs at least 3 points");
  std::sort(d_grid.begin(), d_grid.end());
  detail::require(d_grid.front() > 0.0 && d_grid.back() / d_grid.front() >= 1e3 * (1 - 1e-12),
                  "d grid must span at least 3 decades");
  FlopScan f;
  f.d = d_grid;
  f.noise = noise;
  f.d_star = sys.d_star();
  for (double d : d_grid) {
    const auto sup = sys.superposition(d);
    f.mu_amplitude.push_back(
        oscillation_fit(sup, Observable::magnetic_moment, sys.particle.charge, opt, kAmplitudeSamples)
            .amplitude);
    f.s3_amplitude.push_back(oscillation_fit(sup, Observable::spin, 0.0, opt, kAmplitudeSamples).amplitude);
  }
  const auto n = d_grid.size();
  f.mu_argmax = static_cast<std::size_t>(
      std::max_element(f.mu_amplitude.begin(), f.mu_amplitude.end()) - f.mu_amplitude.begin());
  f.mu_interior_maximum = f.mu_argmax > 0 && f.mu_argmax + 1 < n;
  std::size_t nearest = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (std::abs(std::log(d_grid[k] / f.d_star)) < std::abs(std::log(d_grid[nearest] / f.d_star)))
      nearest = k;
  f.mu_peak_dominates = f.mu_argmax == nearest;
  const double top = *std::max_element(f.s3_amplitude.begin(), f.s3_amplitude.end());
  f.s3_monotone = true;
  f.s3_interior_extremum = false;
  for (std::size_t k = 1; k < n; ++k) {
    if (f.s3_amplitude[k] < f.s3_amplitude[k - 1] - noise * top) f.s3_monotone = false;
    if (k + 1 < n) {
      const double l = f.s3_amplitude[k - 1], c = f.s3_amplitude[k], r = f.s3_amplitude[k + 1];
      const double tol = noise * top;
      if ((c > l + tol && c > r + tol) || (c < l - tol && c < r - tol)) f.s3_interior_extremum = true;
    }
  }
  return f;
}

struct ResonanceMaximum {
  double d_star;         // predicted
  double d_numeric;      // argmax of the μ_z amplitude
  double relative_error;
  double amplitude;      // erg/G at d_numeric
  int evaluations;
};

/// Maximizes the μ_z oscillation amplitude over d within [d*/10^w, d*·10^w].
inline ResonanceMaximum maximize_moment_amplitude(const PairSystem& sys, double half_decades = 1.0,
                                                  double rel_tol = 1e-8,
                                                  const QuadratureOptions& opt = {}) {
  ResonanceMaximum m;
  m.d_star = sys.d_star();
  const double w = std::pow(10.0, half_decades);
  const auto r = golden_section_max_log([&](double d) { return moment_amplitude(sys, d, opt); },
                                        m.d_star / w, m.d_star * w, rel_tol);
  m.d_numeric = r.x;
  m.amplitude = r.value;
  m.evaluations = r.evaluations;
  m.relative_error = std::abs(r.x - m.d_star) / m.d_star;
  return m;
}

}  // namespace dwm
