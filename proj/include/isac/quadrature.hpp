#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string_view>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "isac/errors.hpp"

namespace isac {

struct QuadratureConfig {
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  // Maximum bisection depth of the adaptive Gauss-Kronrod rule.
  unsigned max_depth = 12;
};

namespace detail {

[[noreturn]] inline void quadrature_failed(std::string_view what, double value,
                                           double error, const QuadratureConfig& cfg) {
  std::ostringstream msg;
  msg << "quadrature did not converge in " << what << ": value=" << value
      << " error_estimate=" << error << " abs_tol=" << cfg.abs_tol
      << " rel_tol=" << cfg.rel_tol << " max_depth=" << cfg.max_depth;
  throw NumericalFailure(msg.str());
}

}  // namespace detail

namespace detail {

struct Estimate {
  double value;
  double error;
};

// One 31-point Gauss-Kronrod panel on [a, b] with its error estimate.
template <class F>
Estimate gk_panel(F& f, double a, double b) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double error = 0.0;
  const double v = Rule::integrate([&](double x) { return f(mid + half * x); }, -1.0, 1.0, 0, 0.0,
                                   &error);
  return {half * v, half * error};
}

// Bisects until each panel meets its share of the absolute target.
template <class F>
Estimate gk_adaptive(F& f, double a, double b, Estimate whole, double target, unsigned depth) {
  if (whole.error <= target || depth == 0) return whole;
  const double mid = 0.5 * (a + b);
  const Estimate left = gk_panel(f, a, mid);
  const Estimate right = gk_panel(f, mid, b);
  const Estimate l = gk_adaptive(f, a, mid, left, 0.5 * target, depth - 1);
  const Estimate r = gk_adaptive(f, mid, b, right, 0.5 * target, depth - 1);
  return {l.value + r.value, l.error + r.error};
}

}  // namespace detail

// Adaptive 31-point Gauss-Kronrod over [a, b]; b may be +infinity, mapped
// through t = a + x / (1 - x). Boost supplies the rule; the bisection is
// local so that an absolute floor stops it on negligible integrands.
// Throws NumericalFailure unless error <= max(abs_tol, rel_tol |value|).
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& cfg,
                 std::string_view what) {
  detail::Estimate est{0.0, 0.0};
  const auto run = [&](auto& g, double lo, double hi) {
    const detail::Estimate first = detail::gk_panel(g, lo, hi);
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(first.value));
    est = detail::gk_adaptive(g, lo, hi, first, target, cfg.max_depth);
  };
  if (std::isinf(b)) {
    auto g = [&](double x) {
      const double w = 1.0 - x;
      return f(a + x / w) / (w * w);
    };
    run(g, 0.0, 1.0);
  } else {
    run(f, a, b);
  }
  if (!std::isfinite(est.value) ||
      est.error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(est.value))) {
    detail::quadrature_failed(what, est.value, est.error, cfg);
  }
  return est.value;
}

// E[g(T)] for T ~ Exp(1), i.e. the integral of exp(-t) g(t) over [0, inf).
template <class G>
double expect_exponential(G&& g, const QuadratureConfig& cfg, std::string_view what) {
  return integrate([&g](double t) { return std::exp(-t) * g(t); }, 0.0,
                   std::numeric_limits<double>::infinity(), cfg, what);
}

// Same, for integrands with a sharp feature near t = knot << 1: the range is
// cut at knot, 4 knot, 16 knot, ... so every piece sees it at a fixed
// relative scale.
template <class G>
double expect_exponential(G&& g, const QuadratureConfig& cfg, std::string_view what,
                          double knot) {
  if (!(knot > 0.0) || knot >= 0.25) return expect_exponential(g, cfg, what);
  const auto f = [&g](double t) { return std::exp(-t) * g(t); };
  double sum = integrate(f, 0.0, knot, cfg, what);
  double lo = knot;
  for (; lo < 1.0; lo *= 4.0) sum += integrate(f, lo, 4.0 * lo, cfg, what);
  return sum + integrate(f, lo, std::numeric_limits<double>::infinity(), cfg, what);
}

}  // namespace isac
