#pragma once

// Electron examples: localization length and wave frequency against H_z, and
// the same under the resonance constraint for small 𝓔0.

#include <array>
#include <cmath>
#include <vector>

#include "dwm/eigen.hpp"
#include "dwm/resonance.hpp"
#include "dwm/spinor.hpp"
#include "dwm/units.hpp"

namespace dwm {

inline constexpr std::array<double, 3> kTableFields{1.0, 1e3, 4e5};  // G

struct Table1Row {
  double H_z;
  double l, omega;                  // computed: cm, Hz
  double l_printed, omega_printed;
  double l_dev() const { return l / l_printed - 1.0; }
  double omega_dev() const { return omega / omega_printed - 1.0; }
};

inline std::vector<Table1Row> table1(const PhysicalConstants& k, double e0 = 1.0) {
  static constexpr std::array<double, 3> l_pr{7.26e-4, 2.29e-5, 1.15e-6};
  static constexpr std::array<double, 3> w_pr{2.80e6, 2.80e9, 1.12e12};
  const Particle e = Particle::electron(k);
  std::vector<Table1Row> rows;
  for (std::size_t i = 0; i < kTableFields.size(); ++i) {
    const double H = kTableFields[i];
    rows.push_back({H, localization_length(H, k),
                    cyclic_frequency(angular_frequency(e0, H, e, k)), l_pr[i], w_pr[i]});
  }
  return rows;
}

inline constexpr double kTable2E0 = 0.4117e-2;

struct Table2Row {
  double H_z;
  double omega;      // Hz
  double hP;         // resonance-consistent h·P with p = 0 (P = 1)
  double hP_approx;  // √(ħ|e|H_z/(m²c³))/|𝓔0|, the |𝓔0| ≪ 1, Π ≈ −1 limit
  double omega_printed, hP_printed;
  std::array<double, 2> roots;  // the resonant pair
  double omega_dev() const { return omega / omega_printed - 1.0; }
  double hP_dev() const { return hP / hP_printed - 1.0; }
};

namespace detail {

/// The two roots of largest magnitude; near ±1 for small 𝓔0 and h.
inline std::array<double, 2> outer_pair(const NormalizedConfig& n) {
  auto r = solve_cubic(n.e0, n.lambda_, n.h, n.s).real_roots();
  if (r.size() < 2) throw domain_error("fewer than two real roots");
  std::sort(r.begin(), r.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
  return {std::max(r[0], r[1]), std::min(r[0], r[1])};
}

}  // namespace detail

/// Finds h at which the resonance curvature d* of the outer root pair equals
/// the curvature set by H_z, for an electron at rest along z.
inline Table2Row table2_row(double H_z, double e0, const PhysicalConstants& k) {
  const Particle e = Particle::electron(k);
  const double d = curvature_from_field(H_z, e.charge, k);
  const Branch s = e.charge * H_z > 0 ? Branch::positive : Branch::negative;
  const double Omega = angular_frequency(e0, H_z, e, k);
  const double mc2 = e.mass * k.c * k.c;
  const double lambda = upper_minus(s) * k.hbar * Omega / mc2;  // p = 0

  auto mismatch = [&](double h) {
    NormalizedConfig n{e0, lambda, h, d, s, Direction::forward, 1.0};
    const auto r = detail::outer_pair(n);
    const double t1 = envelope_tilt(r[0], n, e.mass, k), t2 = envelope_tilt(r[1], n, e.mass, k);
    return std::log(extremal_d(t1, t2) / d);
  };
  double lo = 1e-12, hi = 1.0;
  detail::require(mismatch(lo) < 0 && mismatch(hi) > 0, "no resonant h in (1e-12, 1)");
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-14; ++it) {
    const double mid = std::sqrt(lo * hi);
    (mismatch(mid) < 0 ? lo : hi) = mid;
  }
  const double h = std::sqrt(lo * hi);

  Table2Row row;
  row.H_z = H_z;
  row.omega = cyclic_frequency(Omega);
  row.hP = h;
  row.hP_approx =
      std::sqrt(k.hbar * std::abs(e.charge * H_z) / (e.mass * e.mass * k.c * k.c * k.c)) /
      std::abs(e0);
  row.roots = detail::outer_pair({e0, lambda, h, d, s, Direction::forward, 1.0});
  return row;
}

inline std::vector<Table2Row> table2(const PhysicalConstants& k, double e0 = kTable2E0) {
  static constexpr std::array<double, 3> w_pr{7.04e7, 7.04e10, 2.82e14};
  static constexpr std::array<double, 3> hp_pr{3.66e-5, 1.17e-3, 2.31e-2};
  std::vector<Table2Row> rows;
  for (std::size_t i = 0; i < kTableFields.size(); ++i) {
    Table2Row r = table2_row(kTableFields[i], e0, k);
    r.omega_printed = w_pr[i];
    r.hP_printed = hp_pr[i];
    rows.push_back(r);
  }
  return rows;
}

}  // namespace dwm
