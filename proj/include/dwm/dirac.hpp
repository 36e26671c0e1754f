#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dwm {

using Mat4 = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;

struct DiracRepresentation {
  std::array<Mat4, 3> alpha;
  Mat4 beta;
  std::string label;

  /// α_k = [[0, σ_k], [σ_k, 0]], β = diag(I, −I).
  static DiracRepresentation standard() {
    const auto s = pauli();
    DiracRepresentation r;
    for (int k = 0; k < 3; ++k) r.alpha[k] = blocks(Mat2::Zero(), s[k], s[k], Mat2::Zero());
    r.beta = blocks(Mat2::Identity(), Mat2::Zero(), Mat2::Zero(), -Mat2::Identity());
    r.label = "dirac";
    return r;
  }

  /// Weyl basis: α_k = diag(−σ_k, σ_k), β = [[0, I], [I, 0]].
  static DiracRepresentation chiral() {
    const auto s = pauli();
    DiracRepresentation r;
    for (int k = 0; k < 3; ++k) r.alpha[k] = blocks(-s[k], Mat2::Zero(), Mat2::Zero(), s[k]);
    r.beta = blocks(Mat2::Zero(), Mat2::Identity(), Mat2::Identity(), Mat2::Zero());
    r.label = "chiral";
    return r;
  }

  /// Majorana basis, U·(Dirac)·U† with U = [[I, σ₂], [σ₂, −I]]/√2.
  static DiracRepresentation majorana() {
    const auto s = pauli();
    Mat4 U = blocks(Mat2::Identity(), s[1], s[1], -Mat2::Identity()) / std::sqrt(2.0);
    DiracRepresentation r = standard().transformed(U);
    r.label = "majorana";
    return r;
  }

  DiracRepresentation transformed(const Mat4& U) const {
    DiracRepresentation r;
    for (int k = 0; k < 3; ++k) r.alpha[k] = U * alpha[k] * U.adjoint();
    r.beta = U * beta * U.adjoint();
    r.label = label + "/transformed";
    return r;
  }

  DiracRepresentation with_negated_beta() const {
    DiracRepresentation r = *this;
    r.beta = -beta;
    r.label = label + "/-beta";
    return r;
  }

  DiracRepresentation with_negated_alpha() const {
    DiracRepresentation r = *this;
    for (auto& a : r.alpha) a = -a;
    r.label = label + "/-alpha";
    return r;
  }

  /// Largest deviation from Hermiticity and from the Clifford relations
  /// {α_i, α_j} = 2δ_ij, {α_i, β} = 0, β² = I.
  double algebra_defect() const {
    const Mat4 I = Mat4::Identity();
    double worst = 0.0;
    auto upd = [&](const Mat4& m) { worst = std::max(worst, m.cwiseAbs().maxCoeff()); };
    for (int i = 0; i < 3; ++i) {
      upd(alpha[i] - alpha[i].adjoint());
      for (int j = 0; j < 3; ++j)
        upd(alpha[i] * alpha[j] + alpha[j] * alpha[i] - (i == j ? 2.0 : 0.0) * I);
      upd(alpha[i] * beta + beta * alpha[i]);
    }
    upd(beta - beta.adjoint());
    upd(beta * beta - I);
    return worst;
  }

 private:
  using Mat2 = Eigen::Matrix2cd;

  static std::array<Mat2, 3> pauli() {
    const std::complex<double> i(0, 1);
    Mat2 sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, -i, i, 0;
    sz << 1, 0, 0, -1;
    return {sx, sy, sz};
  }

  static Mat4 blocks(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
    Mat4 m;
    m << a, b, c, d;
    return m;
  }
};

/// Alternate representations scanned during certification.
inline std::vector<DiracRepresentation> representation_family() {
  const auto d = DiracRepresentation::standard();
  return {d,
          d.with_negated_beta(),
          d.with_negated_alpha(),
          d.with_negated_alpha().with_negated_beta(),
          DiracRepresentation::chiral(),
          DiracRepresentation::majorana()};
}

/// exp(−½ α₁α₂ Φ): spinor rotation by Φ about z. Since (α₁α₂)² = −1 the
/// series collapses to cos(Φ/2) − α₁α₂ sin(Φ/2). The Hermitian iα₁α₂ has
/// eigenvalues ±1; they are kept for inspection.
class RotationOperator {
 public:
  explicit RotationOperator(const DiracRepresentation& rep) {
    const std::complex<double> i(0, 1);
    generator_ = rep.alpha[0] * rep.alpha[1];
    Eigen::SelfAdjointEigenSolver<Mat4> es((i * generator_).eval(), Eigen::EigenvaluesOnly);
    values_ = es.eigenvalues();
  }

  Mat4 operator()(double phi) const {
    return std::cos(0.5 * phi) * Mat4::Identity() - std::sin(0.5 * phi) * generator_;
  }

  /// exp(−½ α₁α₂ Φ)·v without forming the matrix.
  Spinor apply(double phi, const Spinor& v) const {
    return std::cos(0.5 * phi) * v - std::sin(0.5 * phi) * (generator_ * v);
  }

  /// α₁α₂, the matrix whose −½Φ multiple is exponentiated.
  const Mat4& generator() const { return generator_; }
  const Eigen::Vector4d& eigenvalues() const { return values_; }

 private:
  Eigen::Vector4d values_;
  Mat4 generator_;
};

}  // namespace dwm
