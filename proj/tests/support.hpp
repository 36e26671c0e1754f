#pragma once

// Random valid configurations shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "dwm/dwm.hpp"

namespace dwm::testing {

struct RandomState {
  NormalizedConfig cfg;
  PhysicalConfig phys;
  std::vector<double> roots;  // all real and distinct
};

/// A configuration in the relativistic regime (d·λ_C² in [0.05, 2]) whose
/// cubic has three well-separated real roots and h² > 0, built from a random
/// root pair (Π, η) and 𝓔0.
inline RandomState random_state(std::mt19937_64& rng, const PhysicalConstants& k) {
  const Particle e = Particle::electron(k);
  const double lc = k.compton_length(e.mass);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const Branch s = u(rng) < 0.5 ? Branch::negative : Branch::positive;
    const Direction eps = u(rng) < 0.5 ? Direction::forward : Direction::backward;
    const double e0 = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.1 + 1.4 * u(rng));
    const double r1 = -2.0 + 4.0 * u(rng), r2 = -2.0 + 4.0 * u(rng);
    const PairParams pair = PairParams::from_roots(r1, r2);
    if (std::abs(pair.pi_) < 0.05) continue;
    const FieldParams f = fields_from_pair(pair, e0, s);
    if (f.h_squared < 0.01 || f.h_squared > 4.0) continue;
    const double d = (0.05 + 1.95 * u(rng)) / (lc * lc);
    const NormalizedConfig n = make_normalized(e0, f.lambda_, f.h(), d, s, eps, e, k);
    const auto roots = solve_cubic(n.e0, n.lambda_, n.h, n.s);
    if (roots.real_count() != 3) continue;
    auto r = roots.real_roots();
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
      if (std::abs(r[i] + upper_minus(s) * e0) < 0.05) ok = false;
      for (std::size_t j = i + 1; j < 3; ++j)
        if (std::abs(r[i] - r[j]) < 0.05) ok = false;
    }
    if (!ok) continue;
    return {n, denormalize(n, e, k), r};
  }
}

/// A random (Π, η, 𝓔0, s) with Π < 0, h² > 0 and a resonance at finite d.
inline PairSystem random_pair_system(std::mt19937_64& rng, const PhysicalConstants& k) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Particle e = Particle::electron(k);
  for (;;) {
    const Branch s = u(rng) < 0.5 ? Branch::negative : Branch::positive;
    const double e0 = 0.2 + 0.8 * u(rng);
    const double pi = -(0.2 + 1.5 * u(rng));
    const double eta = -2.0 + 4.0 * u(rng);
    const PairParams pair{pi, eta};
    const FieldParams f = fields_from_pair(pair, e0, s);
    if (f.h_squared < 0.05 || f.h_squared > 4.0) continue;
    const auto r = pair.roots();
    const double um = upper_minus(s);
    if (std::abs(r[0] + um * e0) < 0.1 || std::abs(r[1] + um * e0) < 0.1) continue;
    const double r3 = third_root(pair, e0, s);
    if (std::abs(r3 - r[0]) < 0.05 || std::abs(r3 - r[1]) < 0.05) continue;
    PairSystem sys{pair, e0, s, Direction::forward, e, k};
    const double lc = k.compton_length(e.mass);
    const double dl = sys.d_star() * lc * lc;
    if (dl < 0.02 || dl > 5.0) continue;
    return sys;
  }
}

}  // namespace dwm::testing
