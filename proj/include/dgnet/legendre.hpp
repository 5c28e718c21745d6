#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dgnet/errors.hpp"

namespace dgnet {

struct LegendreEval {
  double value = 0.0;
  double derivative = 0.0;
};

/// P_k and P_k' at xi via the three-term recurrences
/// (k+1) P_{k+1} = (2k+1) xi P_k - k P_{k-1} and
/// P'_{k+1} = (2k+1) P_k + P'_{k-1}.
inline LegendreEval legendre_eval(int degree, double xi) {
  if (degree < 0) throw DomainError("Legendre degree must be >= 0");
  if (degree == 0) return {1.0, 0.0};
  double p_prev = 1.0, p = xi;        // P_0, P_1
  double d_prev = 0.0, d = 1.0;       // P_0', P_1'
  for (int k = 1; k < degree; ++k) {
    const double p_next = ((2.0 * k + 1.0) * xi * p - k * p_prev) / (k + 1.0);
    const double d_next = (2.0 * k + 1.0) * p + d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d};
}

/// Antiderivative of P_k vanishing in the mean: Q_0 = xi and
/// Q_k = (P_{k+1} - P_{k-1}) / (2k+1) for k >= 1. Used for exact projection
/// of piecewise-constant data.
inline double legendre_antiderivative(int degree, double xi) {
  if (degree < 0) throw DomainError("Legendre degree must be >= 0");
  if (degree == 0) return xi;
  const double above = legendre_eval(degree + 1, xi).value;
  const double below = legendre_eval(degree - 1, xi).value;
  return (above - below) / (2.0 * degree + 1.0);
}

/// Gauss-Legendre rule on [-1, 1]: points ascending, weights summing to 2.
struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;
  int size() const { return static_cast<int>(points.size()); }
};

/// Gauss-Legendre rule with q points, exact for polynomials of degree
/// <= 2q-1. Closed forms up to q = 3; Newton iteration on P_q (converged to
/// 1e-14) for 4 <= q <= 10.
inline QuadratureRule gauss_rule(int q) {
  if (q < 1 || q > 10) {
    throw UnsupportedOrderError("Gauss rule supports 1..10 points, got " +
                                std::to_string(q));
  }
  QuadratureRule rule;
  switch (q) {
    case 1:
      rule.points = {0.0};
      rule.weights = {2.0};
      return rule;
    case 2: {
      const double x = 1.0 / std::sqrt(3.0);
      rule.points = {-x, x};
      rule.weights = {1.0, 1.0};
      return rule;
    }
    case 3: {
      const double x = std::sqrt(0.6);
      rule.points = {-x, 0.0, x};
      rule.weights = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      return rule;
    }
    default:
      break;
  }
  rule.points.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    // Chebyshev-based initial guess, then Newton on P_q.
    double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
    LegendreEval e{};
    for (int iter = 0; iter < 100; ++iter) {
      e = legendre_eval(q, x);
      const double dx = e.value / e.derivative;
      x -= dx;
      if (std::abs(dx) <= 1e-14) {
        e = legendre_eval(q, x);  // refresh derivative at the converged node
        break;
      }
    }
    rule.points[q - 1 - i] = x;  // guesses come out descending
    rule.weights[q - 1 - i] = 2.0 / ((1.0 - x * x) * e.derivative * e.derivative);
  }
  return rule;
}

}  // namespace dgnet
