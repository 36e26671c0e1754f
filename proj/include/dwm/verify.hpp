#pragma once

// Independent check that a sampled wavefunction solves
//   iħ∂Ψ/∂t = cα·(−iħ∇ − (q/c)A)Ψ + βmc²Ψ
// in the circularly polarized wave plus axial field.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dwm/dirac.hpp"
#include "dwm/error.hpp"
#include "dwm/spinor.hpp"
#include "dwm/units.hpp"

namespace dwm {

struct VectorPotential {
  double ax, ay, az;
};

/// A_x = −½H_z y + (H/k)cos(Ωt − kz), A_y = ½H_z x + (H/k)sin(Ωt − kz), A_z = 0.
/// `polarization` = −1 reverses the rotation sense of the wave term.
inline VectorPotential potential(const SpacePoint& p, const PhysicalConfig& cfg,
                                 const PhysicalConstants& k, double polarization = 1.0) {
  const double kw = cfg.wave_number(k);
  detail::require(kw != 0.0, "propagation constant k = 0");
  const double phase = cfg.omega * p.t - kw * p.z;
  const double amp = cfg.H_wave / kw;
  return {-0.5 * cfg.H_z * p.y + amp * std::cos(phase),
          0.5 * cfg.H_z * p.x + polarization * amp * std::sin(phase), 0.0};
}

enum class DerivativeMethod { finite_difference, analytic };

inline std::string to_string(DerivativeMethod m) {
  return m == DerivativeMethod::analytic ? "analytic" : "finite-difference";
}

/// Per-axis length/time over which the sampled wave changes by O(1).
struct DerivativeScales {
  double x, y, z, t;
};

struct FiniteDifferenceOptions {
  int order = 8;
  DerivativeScales scales{1, 1, 1, 1};
};

/// Central-difference weights for the first derivative at offsets 1..order/2.
inline std::span<const double> central_weights(int order) {
  static constexpr double w2[] = {1.0 / 2};
  static constexpr double w4[] = {2.0 / 3, -1.0 / 12};
  static constexpr double w6[] = {3.0 / 4, -3.0 / 20, 1.0 / 60};
  static constexpr double w8[] = {4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
  switch (order) {
    case 2: return w2;
    case 4: return w4;
    case 6: return w6;
    case 8: return w8;
    default: throw validation_error("finite-difference order must be 2, 4, 6 or 8");
  }
}

/// Step h* = scale·ε^(1/(order+1)), balancing truncation against roundoff.
inline double optimal_step(double scale, int order) {
  return scale * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (order + 1));
}

/// Derivative of a spinor-valued function of one coordinate by central
/// differences with the given step. Steps are snapped so that x ± h is exact.
template <class F>
Spinor central_difference(const F& f, double x0, double step, int order) {
  const auto w = central_weights(order);
  volatile double tmp = x0 + step;
  const double h = tmp - x0;
  Spinor acc = Spinor::Zero();
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double off = static_cast<double>(j + 1) * h;
    acc += w[j] * (f(x0 + off) - f(x0 - off));
  }
  return acc / h;
}

struct DiracResidual {
  Spinor residual;  // iħ∂tΨ − HΨ
  double lhs_norm;  // |iħ∂tΨ|
  double rhs_norm;  // |HΨ|
  double floor;     // max_k |mc²Ψ_k|

  double relative() const {
    const double denom = lhs_norm + rhs_norm + floor;
    return denom > 0 ? residual.norm() / denom : 0.0;
  }
};

struct OperatorTerms {
  Spinor value, dt, dx, dy, dz;
};

namespace detail {

inline DiracResidual dirac_residual(const OperatorTerms& w, const SpacePoint& p,
                                    const DiracRepresentation& rep, const PhysicalConfig& cfg,
                                    const PhysicalConstants& k, double charge_sign,
                                    double polarization) {
  for (const Spinor* v : {&w.value, &w.dt, &w.dx, &w.dy, &w.dz})
    if (!v->allFinite()) throw consistency_error("sampler returned non-finite values");
  const cplx i(0, 1);
  const VectorPotential A = potential(p, cfg, k, polarization);
  const double q = charge_sign * cfg.charge;
  const double hb = k.hbar, c = k.c, mc2 = cfg.mass * c * c;
  const Spinor lhs = i * hb * w.dt;
  const Spinor px = -i * hb * w.dx - (q / c) * A.ax * w.value;
  const Spinor py = -i * hb * w.dy - (q / c) * A.ay * w.value;
  const Spinor pz = -i * hb * w.dz - (q / c) * A.az * w.value;
  const Spinor rhs =
      c * (rep.alpha[0] * px + rep.alpha[1] * py + rep.alpha[2] * pz) + mc2 * (rep.beta * w.value);
  return {lhs - rhs, lhs.norm(), rhs.norm(), mc2 * w.value.cwiseAbs().maxCoeff()};
}

}  // namespace detail

/// Dirac residual of an arbitrary sampler Ψ(x, y, z, t) by central differences.
template <class Sampler>
DiracResidual apply_dirac_operator(const Sampler& psi, const SpacePoint& p,
                                   const DiracRepresentation& rep, const PhysicalConfig& cfg,
                                   const PhysicalConstants& k, const FiniteDifferenceOptions& fd,
                                   double charge_sign = 1.0, double polarization = 1.0) {
  OperatorTerms w;
  w.value = psi(p);
  const int n = fd.order;
  w.dt = central_difference([&](double t) { return psi(SpacePoint{p.x, p.y, p.z, t}); }, p.t,
                            optimal_step(fd.scales.t, n), n);
  w.dx = central_difference([&](double x) { return psi(SpacePoint{x, p.y, p.z, p.t}); }, p.x,
                            optimal_step(fd.scales.x, n), n);
  w.dy = central_difference([&](double y) { return psi(SpacePoint{p.x, y, p.z, p.t}); }, p.y,
                            optimal_step(fd.scales.y, n), n);
  w.dz = central_difference([&](double z) { return psi(SpacePoint{p.x, p.y, z, p.t}); }, p.z,
                            optimal_step(fd.scales.z, n), n);
  return detail::dirac_residual(w, p, rep, cfg, k, charge_sign, polarization);
}

/// Dirac residual of a ground state using chain-rule derivatives of the ansatz.
inline DiracResidual apply_dirac_operator_analytic(const GroundState& gs, const SpacePoint& p,
                                                   const DiracRepresentation& rep,
                                                   const PhysicalConfig& cfg,
                                                   const PhysicalConstants& k,
                                                   double charge_sign = 1.0,
                                                   double polarization = 1.0) {
  const WaveJet j = evaluate_jet(gs, p);
  return detail::dirac_residual({j.value, j.dt, j.dx, j.dy, j.dz}, p, rep, cfg, k, charge_sign,
                                polarization);
}

/// Scales for differentiating a ground state near a point.
inline DerivativeScales characteristic_scales(const GroundState& gs, const SpacePoint& p) {
  const double d = gs.cfg.d;
  const double r = std::hypot(p.x, p.y);
  const double transverse = std::sqrt(d) + d * r + std::abs(gs.d1) + std::abs(gs.d2);
  const double rotation = 0.5 + transverse * r;
  const double rate_t = std::abs(gs.energy) / gs.hbar + std::abs(gs.omega) * rotation;
  const double rate_z = std::abs(gs.p_z) / gs.hbar + std::abs(gs.wave_number) * rotation;
  return {1.0 / transverse, 1.0 / transverse, 1.0 / rate_z, 1.0 / rate_t};
}

inline DiracResidual apply_dirac_operator(const GroundState& gs, const SpacePoint& p,
                                          const DiracRepresentation& rep,
                                          const PhysicalConfig& cfg, const PhysicalConstants& k,
                                          DerivativeMethod method, int fd_order = 8,
                                          double charge_sign = 1.0, double polarization = 1.0) {
  if (method == DerivativeMethod::analytic)
    return apply_dirac_operator_analytic(gs, p, rep, cfg, k, charge_sign, polarization);
  FiniteDifferenceOptions fd{fd_order, characteristic_scales(gs, p)};
  return apply_dirac_operator([&](const SpacePoint& q) { return evaluate(gs, q); }, p, rep, cfg,
                              k, fd, charge_sign, polarization);
}

/// One reading of the equation: matrix representation, energy relation used to
/// place E, and the signs of the charge coupling and of the wave rotation.
struct Convention {
  DiracRepresentation rep = DiracRepresentation::standard();
  EnergyRelation relation = EnergyRelation::plus_mc2;
  double charge_sign = 1.0;
  double polarization = 1.0;

  std::string label() const {
    return rep.label + ";" + std::string(to_string(relation)) +
           (charge_sign > 0 ? ";charge=+q" : ";charge=-q") +
           (polarization > 0 ? ";polarization=+" : ";polarization=-");
  }
};

inline std::vector<Convention> default_conventions() {
  std::vector<Convention> out;
  for (const auto& rep : representation_family())
    for (auto rel : {EnergyRelation::plus_mc2, EnergyRelation::minus_mc2})
      for (double q : {1.0, -1.0})
        for (double pol : {1.0, -1.0}) out.push_back({rep, rel, q, pol});
  return out;
}

struct SamplePlan {
  int transverse_points = 10;
  int zt_pairs = 5;
  double width_multiple = 4.0;  // half-width of the box in units of 1/√d
  std::uint64_t seed = 20240611;
  int samples() const { return transverse_points * zt_pairs; }
};

/// Laboratory sample points: (x̃, ỹ) within width_multiple/√d of the envelope
/// center, paired with several (z, t) spread over a wave period.
inline std::vector<SpacePoint> sample_points(const GroundState& gs, const SamplePlan& plan) {
  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double half = plan.width_multiple / std::sqrt(gs.cfg.d);
  const auto ctr = gs.rotating_center();
  // Keep |t| modest against the fastest phase so differences stay resolvable.
  const double fast = std::abs(gs.energy) / gs.hbar + std::abs(gs.omega);
  const double t_span = std::min(2.0 * std::numbers::pi / std::abs(gs.omega), 1e3 / fast);
  const double z_fast = std::abs(gs.p_z) / gs.hbar + std::abs(gs.wave_number);
  const double z_span = std::min(2.0 * std::numbers::pi / std::abs(gs.wave_number), 1e3 / z_fast);
  std::vector<SpacePoint> pts;
  pts.reserve(static_cast<std::size_t>(plan.samples()));
  for (int a = 0; a < plan.zt_pairs; ++a) {
    const double z = z_span * unit(rng);
    const double t = t_span * unit(rng);
    const double phi = gs.wave_phase(z, t);
    const double c = std::cos(phi), s = std::sin(phi);
    for (int b = 0; b < plan.transverse_points; ++b) {
      const double xt = ctr[0] + half * unit(rng);
      const double yt = ctr[1] + half * unit(rng);
      pts.push_back({xt * c - yt * s, xt * s + yt * c, z, t});
    }
  }
  return pts;
}

inline GroundState with_energy_relation(GroundState gs, EnergyRelation rel,
                                        const PhysicalConstants& k) {
  gs.relation = rel;
  gs.energy = energy_from_root(gs.root, gs.p_z, gs.cfg.epsilon, gs.mass, k, rel);
  return gs;
}

struct ConventionResult {
  std::string convention;
  double residual_rel;
};

struct ResidualReport {
  int samples = 0;
  double residual_rel = 0.0;
  DerivativeMethod method = DerivativeMethod::finite_difference;
  std::string convention;
  bool pass = false;
  std::vector<ConventionResult> scanned;
};

/// Largest relative residual over the sample points under one convention.
inline double max_residual(const GroundState& gs, const PhysicalConfig& phys,
                           const PhysicalConstants& k, const Convention& conv,
                           std::span<const SpacePoint> pts, DerivativeMethod method,
                           int fd_order = 8) {
  const GroundState state = with_energy_relation(gs, conv.relation, k);
  double worst = 0.0;
  for (const auto& p : pts)
    worst = std::max(worst, apply_dirac_operator(state, p, conv.rep, phys, k, method, fd_order,
                                                 conv.charge_sign, conv.polarization)
                                .relative());
  return worst;
}

inline constexpr double certify_threshold = 1e-6;

/// Scans conventions and reports the one with the smallest residual. FAIL when
/// none gets below certify_threshold.
inline ResidualReport certify(const GroundState& gs, const PhysicalConfig& phys,
                              const PhysicalConstants& k, const SamplePlan& plan = {},
                              std::span<const Convention> conventions = {},
                              DerivativeMethod method = DerivativeMethod::finite_difference,
                              int fd_order = 8) {
  const std::vector<Convention> defaults =
      conventions.empty() ? default_conventions() : std::vector<Convention>{};
  const auto convs = conventions.empty() ? std::span<const Convention>(defaults) : conventions;
  const auto pts = sample_points(gs, plan);
  ResidualReport rep;
  rep.samples = static_cast<int>(pts.size());
  rep.method = method;
  rep.residual_rel = std::numeric_limits<double>::infinity();
  for (const auto& conv : convs) {
    const double r = max_residual(gs, phys, k, conv, pts, method, fd_order);
    rep.scanned.push_back({conv.label(), r});
    if (r < rep.residual_rel) {
      rep.residual_rel = r;
      rep.convention = conv.label();
    }
  }
  rep.pass = rep.residual_rel < certify_threshold;
  return rep;
}

}  // namespace dwm
