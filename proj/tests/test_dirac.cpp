#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dwm/dirac.hpp"

using namespace dwm;
using cplx = std::complex<double>;

namespace {

/// exp(−½α₁α₂Φ) from the spectral decomposition of the Hermitian iα₁α₂.
Mat4 rotation_by_eigensystem(const DiracRepresentation& rep, double phi) {
  const cplx i(0, 1);
  const Mat4 g = i * rep.alpha[0] * rep.alpha[1];
  Eigen::SelfAdjointEigenSolver<Mat4> es(g);
  Eigen::Vector4cd ph;
  for (int k = 0; k < 4; ++k) ph[k] = std::polar(1.0, 0.5 * es.eigenvalues()[k] * phi);
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TEST(Representation, CliffordAlgebra) {
  for (const auto& rep : representation_family()) EXPECT_LT(rep.algebra_defect(), 1e-14) << rep.label;
}

TEST(Representation, MajoranaIsRealAndImaginary) {
  const auto m = DiracRepresentation::majorana();
  for (const auto& a : m.alpha) EXPECT_LT(a.imag().cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(m.beta.real().cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Representation, StandardBlocks) {
  const auto d = DiracRepresentation::standard();
  EXPECT_EQ(d.beta(0, 0), cplx(1));
  EXPECT_EQ(d.beta(3, 3), cplx(-1));
  // α₂ upper-right block is σ₂
  EXPECT_EQ(d.alpha[1](0, 3), cplx(0, -1));
  EXPECT_EQ(d.alpha[1](1, 2), cplx(0, 1));
}

TEST(Rotation, FullTurnIsMinusOne) {
  for (const auto& rep : representation_family()) {
    const RotationOperator R(rep);
    EXPECT_LT((R(2 * std::numbers::pi) + Mat4::Identity()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((R(4 * std::numbers::pi) - Mat4::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Rotation, MatchesEigensystem) {
  for (const auto& rep : representation_family()) {
    const RotationOperator R(rep);
    for (double phi : {-2.3, 0.0, 0.4, 1.7, 9.1})
      EXPECT_LT((R(phi) - rotation_by_eigensystem(rep, phi)).cwiseAbs().maxCoeff(), 1e-13);
    for (double ev : R.eigenvalues()) EXPECT_NEAR(std::abs(ev), 1.0, 1e-14);
  }
}

TEST(Rotation, GroupLawAndUnitarity) {
  const RotationOperator R(DiracRepresentation::standard());
  const Mat4 a = R(0.7), b = R(-1.9);
  EXPECT_LT((a * b - R(-1.2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((a * a.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  const Spinor v = Spinor::Random();
  EXPECT_LT((R.apply(0.7, v) - a * v).norm(), 1e-14);
}
