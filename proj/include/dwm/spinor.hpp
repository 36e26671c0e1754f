#pragma once

// Constant-spinor ("ground") solutions ψ∓ and the laboratory-frame wave
//   Ψ = exp[−iEt/ħ + ipz/ħ − ½α₁α₂(Ωt − kz) + D] ψ,
//   D = −½d(x̃² + ỹ²) + d₁x̃ + d₂ỹ,
// with (x̃, ỹ) the coordinates co-rotating with the wave phase Φ = Ωt − kz.

#include <cmath>
#include <complex>
#include <numbers>

#include "dwm/dirac.hpp"
#include "dwm/eigen.hpp"
#include "dwm/error.hpp"
#include "dwm/units.hpp"

namespace dwm {

struct SpacePoint {
  double x = 0, y = 0, z = 0, t = 0;
};

struct WaveSample {
  SpacePoint position;
  Spinor value;
};

struct BuildOptions {
  EnergyRelation relation = EnergyRelation::plus_mc2;
  /// Reject roots that do not satisfy the cubic (scaled residual > 1e-8).
  /// Off only for deliberately perturbed states.
  bool require_root = true;
};

struct GroundState {
  NormalizedConfig cfg;
  double root;          // 𝓔
  Spinor spinor_const;  // unnormalized column
  double norm_N;        // N∓, may underflow for strongly tilted states; see log_norm
  double log_norm;
  cplx d1;              // cm⁻¹
  double d2;            // cm⁻¹
  double energy;        // E, erg
  double p_z;           // g·cm/s
  double omega;         // Ω, rad/s
  double wave_number;   // k, cm⁻¹
  double mass;
  double hbar;
  EnergyRelation relation;
  RotationOperator rotation{DiracRepresentation::standard()};

  /// 𝓔 ∓ 𝓔0.
  double tilt_denominator() const { return root + upper_minus(cfg.s) * cfg.e0; }

  /// Phase of the wave Φ = Ωt − kz.
  double wave_phase(double z, double t) const { return omega * t - wave_number * z; }

  /// Center of |e^D|² in the rotating frame: (Re d₁/d, d₂/d).
  std::array<double, 2> rotating_center() const { return {d1.real() / cfg.d, d2 / cfg.d}; }
};

/// Unnormalized column of ψ− (s = −1) or ψ+ (s = +1).
inline Spinor ground_spinor_column(double root, double e0, double h, Branch s, Direction epsilon) {
  const double E = root, eps = sign(epsilon);
  Spinor v;
  if (s == Branch::negative) {
    v << h * E, -eps * (E + 1) * (E - e0), eps * h * E, -(E - 1) * (E - e0);
  } else {
    v << (E + 1) * (E + e0), eps * E * h, -eps * (E - 1) * (E + e0), -E * h;
  }
  return v;
}

/// d₂ = 𝓔0·m·c·h / (2ħ(𝓔 ∓ 𝓔0)); independent of d.
inline double envelope_tilt(double root, const NormalizedConfig& cfg, double mass,
                            const PhysicalConstants& k) {
  const double denom = root + upper_minus(cfg.s) * cfg.e0;
  if (std::abs(denom) < 1e-12) throw domain_error("envelope-tilt singularity: calE = ±E0");
  return cfg.e0 * mass * k.c * cfg.h / (2.0 * k.hbar * denom);
}

inline GroundState build_ground_state(const NormalizedConfig& cfg, double root, double mass,
                                      const PhysicalConstants& k, BuildOptions opts = {}) {
  cfg.validate();
  detail::require(cfg.e0 != 0.0, "E0 must be nonzero");
  detail::require(mass > 0.0, "mass must be positive");
  detail::require(std::isfinite(root), "root must be finite");
  if (opts.require_root) {
    const Cubic poly = ground_state_cubic(cfg.e0, cfg.lambda_, cfg.h, cfg.s);
    if (scaled_residual(poly, root) > 1e-8)
      throw domain_error("value is not a real root of the eigenvalue cubic");
  }

  GroundState gs;
  gs.cfg = cfg;
  gs.root = root;
  gs.mass = mass;
  gs.hbar = k.hbar;
  gs.relation = opts.relation;
  const double denom = gs.tilt_denominator();
  gs.d2 = envelope_tilt(root, cfg, mass, k);
  gs.d1 = cplx(0.0, upper_minus(cfg.s) * gs.d2);
  gs.spinor_const = ground_spinor_column(root, cfg.e0, cfg.h, cfg.s, cfg.epsilon);

  const double quad = (root * root + 1.0) * denom * denom + cfg.h * cfg.h * root * root;
  gs.log_norm = 0.5 * std::log(cfg.d / (2.0 * std::numbers::pi)) -
                gs.d2 * gs.d2 / (2.0 * cfg.d) - 0.5 * std::log(quad);
  gs.norm_N = std::exp(gs.log_norm);

  gs.omega = 2.0 * k.hbar * cfg.d / (cfg.e0 * mass);
  gs.wave_number = sign(cfg.epsilon) * gs.omega / k.c;
  const double mc2 = mass * k.c * k.c;
  const double eps = sign(cfg.epsilon);
  gs.p_z = eps * (cfg.lambda_ * mc2 - upper_minus(cfg.s) * k.hbar * gs.omega) / (2.0 * k.c);
  gs.energy = energy_from_root(root, gs.p_z, cfg.epsilon, mass, k, opts.relation);
  return gs;
}

/// Builds the state on a laboratory configuration: normalizes, then checks
/// that the requested root belongs to it.
inline GroundState build_ground_state(const PhysicalConfig& phys, double root,
                                      const PhysicalConstants& k, BuildOptions opts = {}) {
  return build_ground_state(normalize(phys, k), root, phys.mass, k, opts);
}

namespace detail {

struct Frame {
  double phi, c, s, xt, yt;
  cplx D, dD_dxt, dD_dyt;
};

inline Frame frame_at(const GroundState& gs, const SpacePoint& p) {
  Frame f;
  f.phi = gs.wave_phase(p.z, p.t);
  f.c = std::cos(f.phi);
  f.s = std::sin(f.phi);
  f.xt = p.x * f.c + p.y * f.s;
  f.yt = -p.x * f.s + p.y * f.c;
  const double d = gs.cfg.d;
  f.D = -0.5 * d * (f.xt * f.xt + f.yt * f.yt) + gs.d1 * f.xt + gs.d2 * f.yt;
  f.dD_dxt = -d * f.xt + gs.d1;
  f.dD_dyt = cplx(-d * f.yt + gs.d2);
  return f;
}

inline cplx scalar_factor(const GroundState& gs, const SpacePoint& p, const Frame& f) {
  const cplx i(0, 1);
  const cplx phase = -i * (gs.energy / gs.hbar) * p.t + i * (gs.p_z / gs.hbar) * p.z;
  return std::exp(gs.log_norm + f.D + phase);
}

}  // namespace detail

inline Spinor evaluate(const GroundState& gs, const SpacePoint& p) {
  const detail::Frame f = detail::frame_at(gs, p);
  return detail::scalar_factor(gs, p, f) * gs.rotation.apply(f.phi, gs.spinor_const);
}

inline WaveSample sample(const GroundState& gs, const SpacePoint& p) { return {p, evaluate(gs, p)}; }

/// Ψ and its first derivatives by the chain rule through (x̃, ỹ, Φ).
struct WaveJet {
  Spinor value, dt, dx, dy, dz;
};

inline WaveJet evaluate_jet(const GroundState& gs, const SpacePoint& p) {
  const cplx i(0, 1);
  const detail::Frame f = detail::frame_at(gs, p);
  WaveJet j;
  j.value = detail::scalar_factor(gs, p, f) * gs.rotation.apply(f.phi, gs.spinor_const);
  const cplx dD_dphi = f.dD_dxt * f.yt - f.dD_dyt * f.xt;
  const Spinor spin_part = -0.5 * (gs.rotation.generator() * j.value);
  j.dt = (-i * gs.energy / gs.hbar + gs.omega * dD_dphi) * j.value + gs.omega * spin_part;
  j.dz = (i * gs.p_z / gs.hbar - gs.wave_number * dD_dphi) * j.value -
         gs.wave_number * spin_part;
  j.dx = (f.dD_dxt * f.c - f.dD_dyt * f.s) * j.value;
  j.dy = (f.dD_dxt * f.s + f.dD_dyt * f.c) * j.value;
  return j;
}

/// Ψ†Ψ from the closed form N²e^{2Re D}·ψ†ψ.
inline double density_closed_form(const GroundState& gs, const SpacePoint& p) {
  const detail::Frame f = detail::frame_at(gs, p);
  return std::exp(2.0 * (gs.log_norm + f.D.real())) * gs.spinor_const.squaredNorm();
}

}  // namespace dwm
