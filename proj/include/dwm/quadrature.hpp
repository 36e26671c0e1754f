#pragma once

// Gauss–Hermite rules and tensor-product integration over the transverse
// plane for integrands of the form Gaussian × polynomial × bounded phase.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "dwm/error.hpp"

namespace dwm {

namespace detail {

template <class T>
T zero_of() {
  if constexpr (std::is_base_of_v<Eigen::DenseBase<T>, T>)
    return T::Zero();
  else
    return T{};
}

/// Component-wise |cur − prev| ≤ tol·max(|cur|, scale).
template <class T>
bool agrees(const T& cur, const T& prev, double tol, double scale) {
  if constexpr (std::is_base_of_v<Eigen::DenseBase<T>, T>) {
    for (Eigen::Index k = 0; k < cur.size(); ++k)
      if (std::abs(cur[k] - prev[k]) > tol * std::max(std::abs(cur[k]), scale)) return false;
    return true;
  } else {
    return std::abs(cur - prev) <= tol * std::max(std::abs(cur), scale);
  }
}

}  // namespace detail

/// Nodes and weights for ∫ f(u) e^{−u²} du ≈ Σ w_i f(u_i). `unweighted` holds
/// w_i·e^{u_i²}, for integrands that carry their own Gaussian.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> unweighted;

  int order() const { return static_cast<int>(nodes.size()); }

  /// Newton iteration on the orthonormal Hermite recurrence with the usual
  /// asymptotic starting guesses for the largest roots.
  static GaussHermiteRule compute(int n) {
    detail::require(n >= 1 && n <= 256, "Gauss-Hermite order must be in [1, 256]");
    GaussHermiteRule r;
    r.nodes.assign(n, 0.0);
    r.weights.assign(n, 0.0);
    r.unweighted.assign(n, 0.0);
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
      if (i == 0)
        z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -1.0 / 6.0);
      else if (i == 1)
        z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
      else if (i == 2)
        z = 1.86 * z - 0.86 * r.nodes[0];
      else if (i == 3)
        z = 1.91 * z - 0.91 * r.nodes[1];
      else
        z = 2.0 * z - r.nodes[i - 2];
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = pim4, p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt(static_cast<double>(j - 1) / j) * p3;
        }
        pp = std::sqrt(2.0 * n) * p2;
        const double z1 = z;
        z = z1 - p1 / pp;
        if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
      }
      const double w = 2.0 / (pp * pp);
      r.nodes[i] = z;
      r.nodes[n - 1 - i] = -z;
      r.weights[i] = r.weights[n - 1 - i] = w;
      const double wu = std::exp(std::log(2.0) - 2.0 * std::log(std::abs(pp)) + z * z);
      r.unweighted[i] = r.unweighted[n - 1 - i] = wu;
    }
    return r;
  }

  /// Cached rule; safe to call from several threads.
  static const GaussHermiteRule& get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussHermiteRule>(compute(n));
    return *slot;
  }
};

struct QuadratureOptions {
  int order = 24;       // starting order per axis
  int max_order = 192;
  double rel_tol = 1e-11;
  bool adaptive = true;
};

template <class T>
struct QuadratureResult {
  T value{};
  int order = 0;
  bool converged = false;
};

/// ∫∫ f(x, y) dx dy with nodes at center + u/√d; f must contain its own
/// Gaussian decay of curvature d around `center`.
template <class F>
auto gauss_hermite_integrate(const F& f, double d, int order, std::array<double, 2> center = {0, 0}) {
  detail::require(d > 0.0, "Gauss-Hermite curvature must be positive");
  const auto& rule = GaussHermiteRule::get(order);
  const double s = 1.0 / std::sqrt(d);
  using T = std::decay_t<decltype(f(0.0, 0.0))>;
  T acc = detail::zero_of<T>();
  for (int i = 0; i < order; ++i) {
    const double x = center[0] + s * rule.nodes[i];
    T row = detail::zero_of<T>();
    for (int j = 0; j < order; ++j) row += rule.unweighted[j] * f(x, center[1] + s * rule.nodes[j]);
    acc += rule.unweighted[i] * row;
  }
  acc *= s * s;
  return acc;
}

/// Doubles the order until two successive results agree to rel_tol relative
/// to max(|result|, scale), component-wise for vector-valued integrands.
template <class F>
auto gauss_hermite_adaptive(const F& f, double d, std::array<double, 2> center,
                            const QuadratureOptions& opt = {}, double scale = 0.0) {
  using T = std::decay_t<decltype(f(0.0, 0.0))>;
  QuadratureResult<T> out;
  int n = opt.order;
  T prev = gauss_hermite_integrate(f, d, n, center);
  out.value = prev;
  out.order = n;
  if (!opt.adaptive) {
    out.converged = true;
    return out;
  }
  while (2 * n <= opt.max_order) {
    n *= 2;
    const T cur = gauss_hermite_integrate(f, d, n, center);
    out.value = cur;
    out.order = n;
    if (detail::agrees(cur, prev, opt.rel_tol, scale)) {
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  return out;
}

}  // namespace dwm
