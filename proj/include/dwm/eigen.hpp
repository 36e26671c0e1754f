#pragma once

// Normalized-energy roots of the ground-state cubic
//   𝓔³ + (∓𝓔0 + Λ∓)𝓔² − (1 ± 𝓔0Λ∓ + h²)𝓔 ± 𝓔0 = 0
// and the (Π, η) reparameterization of a root pair.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>
#include <vector>

#include "dwm/error.hpp"
#include "dwm/units.hpp"

namespace dwm {

using cplx = std::complex<double>;

/// Monic cubic x³ + a x² + b x + c with real coefficients.
struct Cubic {
  double a, b, c;

  template <class T>
  T operator()(T x) const {
    return ((x + a) * x + b) * x + c;
  }
  template <class T>
  T derivative(T x) const {
    return (3.0 * x + 2.0 * a) * x + b;
  }
};

inline Cubic ground_state_cubic(double e0, double lambda_, double h, Branch s) {
  const double um = upper_minus(s), up = upper_plus(s);
  return {um * e0 + lambda_, -(1.0 + up * e0 * lambda_ + h * h), up * e0};
}

/// |p(x)| / max(1, |x|³).
inline double scaled_residual(const Cubic& p, cplx x) {
  return std::abs(p(x)) / std::max(1.0, std::pow(std::abs(x), 3));
}

struct EigenRoots {
  /// Real roots first in ascending order, then a conjugate pair (Im > 0 first).
  std::array<cplx, 3> roots{};
  std::array<bool, 3> real{};

  int real_count() const { return static_cast<int>(std::count(real.begin(), real.end(), true)); }

  std::vector<double> real_roots() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < 3; ++i)
      if (real[i]) out.push_back(roots[i].real());
    return out;
  }
};

namespace detail {

template <class T>
T newton_polish(const Cubic& p, T x) {
  // Accept a step only while it reduces |p|; near multiple roots Newton stalls.
  for (int it = 0; it < 4; ++it) {
    const T fx = p(x);
    const T dfx = p.derivative(x);
    if (std::abs(dfx) == 0.0) break;
    const T next = x - fx / dfx;
    if (!(std::abs(p(next)) < std::abs(fx))) break;
    x = next;
  }
  return x;
}

}  // namespace detail

/// Closed-form roots (trigonometric form for three real roots, Cardano
/// otherwise), each Newton-polished.
inline EigenRoots solve_cubic(const Cubic& poly) {
  const double a = poly.a, b = poly.b, c = poly.c;
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double disc = -(4.0 * p * p * p + 27.0 * q * q);

  EigenRoots out;
  if (p == 0.0 && q == 0.0) {
    out.roots = {cplx(-shift), cplx(-shift), cplx(-shift)};
    out.real = {true, true, true};
    return out;
  }
  if (disc >= 0.0 && p < 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    std::array<double, 3> r{};
    for (int k = 0; k < 3; ++k)
      r[k] = detail::newton_polish(poly, m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) -
                                             shift);
    std::sort(r.begin(), r.end());
    for (int k = 0; k < 3; ++k) out.roots[k] = r[k];
    out.real = {true, true, true};
    return out;
  }

  // One real root.
  const double half_q = q / 2.0;
  const double rad = std::sqrt(std::max(0.0, half_q * half_q + p * p * p / 27.0));
  const double u = std::cbrt(-half_q - std::copysign(rad, q));
  const double y = u == 0.0 ? 0.0 : u - p / (3.0 * u);
  const double r = detail::newton_polish(poly, y - shift);

  // Deflate: x² + B x + C with B = a + r; C from the better-conditioned form.
  const double B = a + r;
  const double C = std::abs(r) > 1.0 ? -c / r : b + r * B;
  const double im2 = 4.0 * C - B * B;
  cplx z(-B / 2.0, std::sqrt(std::max(0.0, im2)) / 2.0);
  z = detail::newton_polish(poly, z);
  if (z.imag() < 0) z = std::conj(z);
  out.roots = {cplx(r), z, std::conj(z)};
  out.real = {true, false, false};
  return out;
}

inline EigenRoots solve_cubic(double e0, double lambda_, double h, Branch s) {
  return solve_cubic(ground_state_cubic(e0, lambda_, h, s));
}

/// Π = 𝓔1𝓔2, η = 𝓔1 + 𝓔2.
struct PairParams {
  double pi_;
  double eta;

  static PairParams from_roots(double r1, double r2) { return {r1 * r2, r1 + r2}; }

  /// The two roots, larger first; requires η² − 4Π ≥ 0.
  std::array<double, 2> roots() const {
    const double disc = eta * eta - 4.0 * pi_;
    if (disc < 0) throw domain_error("pair (pi, eta) has no real roots");
    const double sq = std::sqrt(disc);
    const double big = eta >= 0 ? (eta + sq) / 2.0 : (eta - sq) / 2.0;
    const double small = big == 0.0 ? 0.0 : pi_ / big;
    return {std::max(big, small), std::min(big, small)};
  }
};

struct FieldParams {
  double h_squared;
  double lambda_;
  bool physical() const { return h_squared >= 0.0; }

  double h() const {
    if (!physical()) throw domain_error("unphysical pair: h^2 < 0");
    return std::sqrt(h_squared);
  }
};

/// Field parameters (h², Λ∓) whose cubic has 𝓔1, 𝓔2 as roots. Obtained from
/// the Vieta relations of the cubic:
///   h² = −(Π+1)/Π · (Π ∓ 𝓔0η + 𝓔0²),  Λ∓ = ±𝓔0 − η ± 𝓔0/Π.
inline FieldParams fields_from_pair(const PairParams& pp, double e0, Branch s) {
  detail::require(pp.pi_ != 0.0, "pi = 0: third root undefined");
  const double um = upper_minus(s), up = upper_plus(s);
  const double h2 = -(pp.pi_ + 1.0) / pp.pi_ * (pp.pi_ + um * e0 * pp.eta + e0 * e0);
  const double lam = up * e0 - pp.eta + up * e0 / pp.pi_;
  return {h2, lam};
}

/// 𝓔3 = ∓𝓔0/Π (product of the three roots is ∓𝓔0).
inline double third_root(const PairParams& pp, double e0, Branch s) {
  detail::require(pp.pi_ != 0.0, "pi = 0: third root undefined");
  return upper_minus(s) * e0 / pp.pi_;
}

/// How the rotating-frame energy E relates to the normalized root 𝓔.
///   minus_mc2: E = εpc − mc²𝓔  (𝓔 ≡ −(E − εpc)/mc², as the definition is printed)
///   plus_mc2:  E = εpc + mc²𝓔  (the relation under which the ground-state
///              spinors satisfy the Dirac equation in the standard representation)
enum class EnergyRelation { plus_mc2, minus_mc2 };

inline std::string_view to_string(EnergyRelation r) {
  return r == EnergyRelation::plus_mc2 ? "E=eps*p*c+m*c^2*calE" : "E=eps*p*c-m*c^2*calE";
}

inline double energy_from_root(double root, double p_z, Direction epsilon, double mass,
                               const PhysicalConstants& k,
                               EnergyRelation rel = EnergyRelation::plus_mc2) {
  const double mc2 = mass * k.c * k.c;
  const double sgn = rel == EnergyRelation::plus_mc2 ? 1.0 : -1.0;
  return sign(epsilon) * p_z * k.c + sgn * mc2 * root;
}

inline double root_from_energy(double energy, double p_z, Direction epsilon, double mass,
                               const PhysicalConstants& k,
                               EnergyRelation rel = EnergyRelation::plus_mc2) {
  const double mc2 = mass * k.c * k.c;
  const double sgn = rel == EnergyRelation::plus_mc2 ? 1.0 : -1.0;
  return sgn * (energy - sign(epsilon) * p_z * k.c) / mc2;
}

}  // namespace dwm
