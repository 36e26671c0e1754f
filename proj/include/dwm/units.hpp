#pragma once

// Gaussian CGS constants and the map between laboratory parameters
// (Ω, H_z, H, p) and the dimensionless set (𝓔0, Λ, h, d, s) that the
// ground-state solutions are written in.

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>

#include "dwm/error.hpp"

namespace dwm {

/// Sign of e·H_z. `negative` selects ψ− and the upper signs of every ∓/±
/// pair; `positive` selects ψ+ and the lower signs.
enum class Branch : int { negative = -1, positive = 1 };

/// Wave propagation along +z (forward) or −z (backward).
enum class Direction : int { forward = 1, backward = -1 };

constexpr double sign(Branch b) { return static_cast<double>(static_cast<int>(b)); }
constexpr double sign(Direction d) { return static_cast<double>(static_cast<int>(d)); }

/// The ∓ of the formulas: −1 on the upper (ψ−) branch, +1 on the lower.
constexpr double upper_minus(Branch b) { return sign(b); }
/// The ± of the formulas: +1 on the upper (ψ−) branch, −1 on the lower.
constexpr double upper_plus(Branch b) { return -sign(b); }

inline Branch flipped(Branch b) {
  return b == Branch::negative ? Branch::positive : Branch::negative;
}

inline Branch branch_from_int(int s) {
  detail::require(s == 1 || s == -1, "branch sign must be +1 or -1");
  return static_cast<Branch>(s);
}

inline Direction direction_from_int(int e) {
  detail::require(e == 1 || e == -1, "epsilon must be +1 or -1");
  return static_cast<Direction>(e);
}

struct PhysicalConstants {
  double c;         // cm/s
  double hbar;      // erg·s
  double e_charge;  // esu, magnitude
  double m_e;       // g
  double mu_B;      // erg/G
  std::string label;

  /// CODATA 2018, converted to Gaussian units.
  static PhysicalConstants codata2018() {
    return {2.99792458e10, 1.054571817e-27, 4.803204712570263e-10,
            9.1093837015e-28, 9.2740100783e-21, "codata2018"};
  }

  /// Constant set named by DWM_CONSTANTS; unset means codata2018.
  static PhysicalConstants from_environment() {
    const char* name = std::getenv("DWM_CONSTANTS");
    return by_name(name == nullptr ? "codata2018" : name);
  }

  static PhysicalConstants by_name(std::string_view name) {
    if (name == "codata2018") return codata2018();
    throw validation_error("unknown constant set '" + std::string(name) + "'");
  }

  /// Reduced Compton wavelength ħ/(mc) of a fermion of the given mass.
  double compton_length(double mass) const { return hbar / (mass * c); }

  /// |q|ħ/(2mc); equals mu_B for the electron.
  double magneton(double mass, double charge) const {
    return std::abs(charge) * hbar / (2.0 * mass * c);
  }

  void validate() const {
    detail::require(c > 0 && hbar > 0 && e_charge > 0 && m_e > 0 && mu_B > 0,
                    "physical constants must be positive");
    const double derived = e_charge * hbar / (2.0 * m_e * c);
    detail::require(std::abs(derived / mu_B - 1.0) < 1e-6,
                    "constant set is inconsistent: mu_B != e hbar / 2 m c");
  }
};

struct Particle {
  double mass;    // g
  double charge;  // esu, signed

  static Particle electron(const PhysicalConstants& k) { return {k.m_e, -k.e_charge}; }
};

/// Laboratory-frame inputs. The wave amplitude is signed: a negative value is
/// the same wave advanced by half a period, which keeps both signs of h
/// representable.
struct PhysicalConfig {
  double omega;   // Ω, rad/s, signed (sign = polarization)
  double H_z;     // G, signed
  double H_wave;  // G
  double p_z;     // g·cm/s
  Direction epsilon = Direction::forward;
  double mass;    // g
  double charge;  // esu, signed

  /// Propagation constant k = εΩ/c.
  double wave_number(const PhysicalConstants& k) const { return sign(epsilon) * omega / k.c; }

  void validate() const {
    detail::require(std::isfinite(omega) && std::isfinite(H_z) && std::isfinite(H_wave) &&
                        std::isfinite(p_z) && std::isfinite(mass) && std::isfinite(charge),
                    "physical configuration contains non-finite values");
    detail::require(mass > 0, "mass must be positive");
    detail::require(omega != 0, "wave frequency must be nonzero (E0 undefined)");
    detail::require(H_z != 0, "H_z must be nonzero (no transverse localization)");
    detail::require(charge != 0, "charge must be nonzero");
  }
};

struct NormalizedConfig {
  double e0;       // 𝓔0
  double lambda_;  // Λ∓ on the branch selected by s
  double h;
  double d;        // cm⁻²
  Branch s = Branch::negative;
  Direction epsilon = Direction::forward;
  double big_p = 1.0;  // sqrt(p²/m²c² + 1)

  void validate() const {
    detail::require(std::isfinite(e0) && std::isfinite(lambda_) && std::isfinite(h) &&
                        std::isfinite(d),
                    "normalized configuration contains non-finite values");
    detail::require(d > 0, "envelope curvature d must be positive");
    detail::require(big_p >= 1.0, "P must be >= 1");
  }
};

/// d = |qH_z|/(2ħc).
inline double curvature_from_field(double H_z, double charge, const PhysicalConstants& k) {
  detail::require(H_z != 0, "H_z must be nonzero (no transverse localization)");
  return std::abs(charge * H_z) / (2.0 * k.hbar * k.c);
}

/// |H_z| reproducing a given curvature d.
inline double field_from_curvature(double d, double charge, const PhysicalConstants& k) {
  detail::require(d > 0, "envelope curvature d must be positive");
  return 2.0 * k.hbar * k.c * d / std::abs(charge);
}

inline NormalizedConfig normalize(const PhysicalConfig& cfg, const PhysicalConstants& k) {
  cfg.validate();
  const Branch s = cfg.charge * cfg.H_z > 0 ? Branch::positive : Branch::negative;
  const double d = curvature_from_field(cfg.H_z, cfg.charge, k);
  const double mc2 = cfg.mass * k.c * k.c;
  const double eps = sign(cfg.epsilon);
  NormalizedConfig n;
  n.s = s;
  n.epsilon = cfg.epsilon;
  n.d = d;
  n.e0 = 2.0 * k.hbar * d / (cfg.omega * cfg.mass);
  n.lambda_ = (2.0 * eps * cfg.p_z * k.c + upper_minus(s) * k.hbar * cfg.omega) / mc2;
  n.h = cfg.charge * cfg.H_wave / (cfg.wave_number(k) * mc2);
  const double pm = cfg.p_z / (cfg.mass * k.c);
  n.big_p = std::sqrt(pm * pm + 1.0);
  return n;
}

/// Inverse of normalize for a particle of given mass and charge. The sign of
/// H_z follows from s and the charge.
inline PhysicalConfig denormalize(const NormalizedConfig& n, const Particle& particle,
                                  const PhysicalConstants& k) {
  n.validate();
  detail::require(n.e0 != 0, "E0 = 0 has no finite wave frequency");
  detail::require(particle.mass > 0 && particle.charge != 0, "invalid particle");
  PhysicalConfig cfg;
  cfg.mass = particle.mass;
  cfg.charge = particle.charge;
  cfg.epsilon = n.epsilon;
  const double mc2 = particle.mass * k.c * k.c;
  const double eps = sign(n.epsilon);
  cfg.omega = 2.0 * k.hbar * n.d / (n.e0 * particle.mass);
  const double field = field_from_curvature(n.d, particle.charge, k);
  cfg.H_z = (particle.charge > 0 ? 1.0 : -1.0) * sign(n.s) * field;
  cfg.p_z = eps * (n.lambda_ * mc2 - upper_minus(n.s) * k.hbar * cfg.omega) / (2.0 * k.c);
  cfg.H_wave = n.h * cfg.wave_number(k) * mc2 / particle.charge;
  return cfg;
}

/// Builds a NormalizedConfig directly from dimensionless inputs, filling P
/// from the momentum implied by Λ.
inline NormalizedConfig make_normalized(double e0, double lambda_, double h, double d, Branch s,
                                        Direction epsilon, const Particle& particle,
                                        const PhysicalConstants& k) {
  NormalizedConfig n{e0, lambda_, h, d, s, epsilon, 1.0};
  n.validate();
  if (e0 != 0) {
    const PhysicalConfig cfg = denormalize(n, particle, k);
    const double pm = cfg.p_z / (particle.mass * k.c);
    n.big_p = std::sqrt(pm * pm + 1.0);
  }
  return n;
}

/// l ≈ 2/√d = 2·sqrt(2ħc/|qH_z|).
inline double localization_length(double H_z, const PhysicalConstants& k, double charge = 0.0) {
  detail::require(H_z != 0, "H_z must be nonzero (no transverse localization)");
  const double q = charge == 0.0 ? k.e_charge : charge;
  return 2.0 * std::sqrt(2.0 * k.hbar * k.c / std::abs(q * H_z));
}

/// H = ε h H_z / 𝓔0.
inline double wave_amplitude(double h, double e0, double H_z, Direction epsilon) {
  detail::require(e0 != 0, "E0 must be nonzero");
  return sign(epsilon) * h * H_z / e0;
}

/// Ω = 2ħd/(𝓔0 m) expressed through the field: |qH_z|/(𝓔0 m c).
inline double angular_frequency(double e0, double H_z, const Particle& particle,
                                const PhysicalConstants& k) {
  detail::require(e0 != 0, "E0 must be nonzero");
  return 2.0 * k.hbar * curvature_from_field(H_z, particle.charge, k) / (e0 * particle.mass);
}

/// Cyclic frequency ω = Ω/2π.
inline double cyclic_frequency(double omega) { return omega / (2.0 * std::numbers::pi); }

}  // namespace dwm
