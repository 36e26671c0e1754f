#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dwm/eigen.hpp"

using namespace dwm;

namespace {

/// Vieta defects of a root triple, scaled by the size of the roots.
double vieta_defect(const Cubic& p, const EigenRoots& r) {
  const cplx x = r.roots[0], y = r.roots[1], z = r.roots[2];
  const double m = std::max({1.0, std::abs(x), std::abs(y), std::abs(z)});
  return std::max({std::abs(x + y + z + p.a) / m, std::abs(x * y + y * z + z * x - p.b) / (m * m),
                   std::abs(x * y * z + p.c) / (m * m * m)});
}

}  // namespace

TEST(Cubic, CoefficientsOfBothBranches) {
  // s = −1: x³ + (−𝓔0 + Λ)x² − (1 + 𝓔0Λ + h²)x + 𝓔0
  const Cubic m = ground_state_cubic(0.3, 0.7, 0.2, Branch::negative);
  EXPECT_DOUBLE_EQ(m.a, -0.3 + 0.7);
  EXPECT_DOUBLE_EQ(m.b, -(1 + 0.21 + 0.04));
  EXPECT_DOUBLE_EQ(m.c, 0.3);
  const Cubic p = ground_state_cubic(0.3, 0.7, 0.2, Branch::positive);
  EXPECT_DOUBLE_EQ(p.a, 0.3 + 0.7);
  EXPECT_DOUBLE_EQ(p.b, -(1 - 0.21 + 0.04));
  EXPECT_DOUBLE_EQ(p.c, -0.3);
}

TEST(Cubic, KnownRoots) {
  const auto r = solve_cubic(Cubic{-6, 11, -6});
  ASSERT_EQ(r.real_count(), 3);
  EXPECT_NEAR(r.roots[0].real(), 1, 1e-14);
  EXPECT_NEAR(r.roots[1].real(), 2, 1e-14);
  EXPECT_NEAR(r.roots[2].real(), 3, 1e-14);
}

TEST(Cubic, ComplexPair) {
  // (x − 2)(x² + 1)
  const auto r = solve_cubic(Cubic{-2, 1, -2});
  ASSERT_EQ(r.real_count(), 1);
  EXPECT_NEAR(r.roots[0].real(), 2, 1e-14);
  EXPECT_NEAR(std::abs(r.roots[1] - cplx(0, 1)), 0, 1e-14);
  EXPECT_NEAR(std::abs(r.roots[2] - cplx(0, -1)), 0, 1e-14);
}

TEST(Cubic, TripleRoot) {
  const auto r = solve_cubic(Cubic{-3, 3, -1});
  for (const auto& x : r.roots) EXPECT_NEAR(std::abs(x - 1.0), 0, 1e-5);
}

TEST(Cubic, ZeroFieldLimit) {
  // h = 0, Λ = 0: roots ±1 and ±𝓔0 on the lower sign
  const auto r = solve_cubic(0.4, 0.0, 0.0, Branch::negative);
  ASSERT_EQ(r.real_count(), 3);
  EXPECT_NEAR(r.roots[0].real(), -1, 1e-14);
  EXPECT_NEAR(r.roots[1].real(), 0.4, 1e-14);
  EXPECT_NEAR(r.roots[2].real(), 1, 1e-14);
}

TEST(Cubic, VietaAndResidualProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double scale = std::pow(10.0, 2 * u(rng));
    const Cubic p = i % 2 ? ground_state_cubic(scale * u(rng), 3 * u(rng), 2 * u(rng),
                                               u(rng) < 0 ? Branch::negative : Branch::positive)
                          : Cubic{scale * u(rng), scale * u(rng), scale * u(rng)};
    const auto r = solve_cubic(p);
    EXPECT_LT(vieta_defect(p, r), 1e-10) << i;
    for (const auto& x : r.roots) EXPECT_LT(scaled_residual(p, x), 1e-10) << i;
  }
}

TEST(Pair, RootsFromPair) {
  const auto r = PairParams{-2.0, 1.0}.roots();
  EXPECT_NEAR(r[0], 2.0, 1e-15);
  EXPECT_NEAR(r[1], -1.0, 1e-15);
  EXPECT_THROW((PairParams{1.0, 0.0}.roots()), domain_error);
}

TEST(Pair, FieldsRoundTripProperty) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int tested = 0;
  while (tested < 2000) {
    const Branch s = u(rng) < 0 ? Branch::negative : Branch::positive;
    const double e0 = 1.5 * u(rng);
    const PairParams pp = PairParams::from_roots(2 * u(rng), 2 * u(rng));
    if (std::abs(pp.pi_) < 1e-2 || std::abs(e0) < 1e-3) continue;
    const FieldParams f = fields_from_pair(pp, e0, s);
    if (!f.physical()) {
      EXPECT_THROW(f.h(), domain_error);
      continue;
    }
    const auto r = solve_cubic(e0, f.lambda_, f.h(), s);
    const auto want = pp.roots();
    const double r3 = third_root(pp, e0, s);
    for (double w : {want[0], want[1], r3}) {
      double best = 1e300;
      for (const auto& x : r.roots) best = std::min(best, std::abs(x - w));
      EXPECT_LT(best, 1e-10 * std::max(1.0, std::abs(w)));
    }
    ++tested;
  }
}

TEST(Pair, UnphysicalPairRejected) {
  // s = −1, Π = −0.3, η = −0.4, 𝓔0 = 0.3 gives h² < 0
  const FieldParams f = fields_from_pair({-0.3, -0.4}, 0.3, Branch::negative);
  EXPECT_FALSE(f.physical());
  EXPECT_THROW(f.h(), domain_error);
  EXPECT_THROW(fields_from_pair({0.0, 1.0}, 0.3, Branch::negative), validation_error);
}

TEST(Pair, AlternativeHSquaredFailsRoundTrip) {
  // h² = −(Π+1)/Π·(1 ∓ 𝓔0η + 𝓔0²) with Λ = ±𝓔0 − η ∓ 𝓔0/Π does not have
  // the pair among its roots, unlike the Vieta form.
  const PairParams pp{-0.5, -1.0};
  const double e0 = 0.5;
  const double h2 = -(pp.pi_ + 1) / pp.pi_ * (1 + e0 * pp.eta + e0 * e0);
  const double lam = -e0 - pp.eta + e0 / pp.pi_;
  const Cubic p = ground_state_cubic(e0, lam, std::sqrt(h2), Branch::negative);
  EXPECT_GT(scaled_residual(p, pp.roots()[0]), 1e-3);
}

TEST(Energy, RootEnergyInverse) {
  const auto k = PhysicalConstants::codata2018();
  for (auto rel : {EnergyRelation::plus_mc2, EnergyRelation::minus_mc2})
    for (Direction eps : {Direction::forward, Direction::backward}) {
      const double p = 1e-17;
      const double E = energy_from_root(0.37, p, eps, k.m_e, k, rel);
      EXPECT_NEAR(root_from_energy(E, p, eps, k.m_e, k, rel), 0.37, 1e-14);
    }
}
