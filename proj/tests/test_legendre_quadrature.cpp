#include <gtest/gtest.h>

#include <cmath>

#include "dgnet/legendre.hpp"

using dgnet::gauss_rule;
using dgnet::legendre_antiderivative;
using dgnet::legendre_eval;
using dgnet::QuadratureRule;

TEST(Legendre, LowDegreeValues) {
  EXPECT_DOUBLE_EQ(legendre_eval(0, 0.3).value, 1.0);
  EXPECT_DOUBLE_EQ(legendre_eval(0, 0.3).derivative, 0.0);
  EXPECT_DOUBLE_EQ(legendre_eval(1, 0.3).value, 0.3);
  EXPECT_DOUBLE_EQ(legendre_eval(1, 0.3).derivative, 1.0);
  EXPECT_DOUBLE_EQ(legendre_eval(2, 0.0).value, -0.5);
  EXPECT_DOUBLE_EQ(legendre_eval(2, 1.0).value, 1.0);
  EXPECT_DOUBLE_EQ(legendre_eval(3, -1.0).value, -1.0);
}

TEST(Legendre, EndpointNormalization) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_DOUBLE_EQ(legendre_eval(n, 1.0).value, 1.0);
    EXPECT_DOUBLE_EQ(legendre_eval(n, -1.0).value, (n % 2 == 0) ? 1.0 : -1.0);
  }
}

TEST(Legendre, DerivativeMatchesFiniteDifference) {
  const double h = 1e-6;
  for (int n = 1; n <= 6; ++n) {
    for (double xi : {-0.7, -0.2, 0.1, 0.6, 0.9}) {
      const double fd =
          (legendre_eval(n, xi + h).value - legendre_eval(n, xi - h).value) / (2 * h);
      EXPECT_NEAR(legendre_eval(n, xi).derivative, fd, 1e-7) << "n=" << n << " xi=" << xi;
    }
  }
}

TEST(Legendre, NegativeDegreeThrows) {
  EXPECT_THROW(legendre_eval(-1, 0.0), dgnet::DomainError);
}

TEST(Legendre, AntiderivativeDifferentiatesBack) {
  const double h = 1e-6;
  for (int n = 0; n <= 5; ++n) {
    for (double xi : {-0.8, -0.1, 0.4, 0.75}) {
      const double fd = (legendre_antiderivative(n, xi + h) -
                         legendre_antiderivative(n, xi - h)) /
                        (2 * h);
      EXPECT_NEAR(fd, legendre_eval(n, xi).value, 1e-8) << "n=" << n << " xi=" << xi;
    }
  }
}

TEST(Legendre, OrthogonalityUnderQuadrature) {
  // A q-point rule integrates P_i * P_j exactly for i + j <= 2q - 1.
  const QuadratureRule rule = gauss_rule(8);
  for (int i = 0; i <= 6; ++i) {
    for (int j = 0; j <= 6; ++j) {
      double acc = 0.0;
      for (int g = 0; g < rule.size(); ++g) {
        acc += rule.weights[g] * legendre_eval(i, rule.points[g]).value *
               legendre_eval(j, rule.points[g]).value;
      }
      const double expected = (i == j) ? 2.0 / (2 * i + 1) : 0.0;
      EXPECT_NEAR(acc, expected, 1e-13) << "i=" << i << " j=" << j;
    }
  }
}

TEST(Quadrature, WeightsSumToTwo) {
  for (int q = 1; q <= 10; ++q) {
    const QuadratureRule rule = gauss_rule(q);
    ASSERT_EQ(rule.size(), q);
    double total = 0.0;
    for (double w : rule.weights) total += w;
    EXPECT_NEAR(total, 2.0, 1e-14) << "q=" << q;
  }
}

TEST(Quadrature, NodesAscendAndLieInside) {
  for (int q = 1; q <= 10; ++q) {
    const QuadratureRule rule = gauss_rule(q);
    for (int i = 0; i < rule.size(); ++i) {
      EXPECT_GT(rule.points[i], -1.0);
      EXPECT_LT(rule.points[i], 1.0);
      if (i > 0) {
        EXPECT_LT(rule.points[i - 1], rule.points[i]);
      }
    }
  }
}

TEST(Quadrature, TwoPointNodes) {
  const QuadratureRule rule = gauss_rule(2);
  const double node = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(rule.points[0], -node, 1e-15);
  EXPECT_NEAR(rule.points[1], node, 1e-15);
  EXPECT_DOUBLE_EQ(rule.weights[0], 1.0);
  EXPECT_DOUBLE_EQ(rule.weights[1], 1.0);
}

TEST(Quadrature, ThreePointNodes) {
  const QuadratureRule rule = gauss_rule(3);
  const double node = std::sqrt(0.6);
  EXPECT_NEAR(rule.points[0], -node, 1e-15);
  EXPECT_NEAR(rule.points[1], 0.0, 1e-15);
  EXPECT_NEAR(rule.points[2], node, 1e-15);
  EXPECT_NEAR(rule.weights[0], 5.0 / 9.0, 1e-15);
  EXPECT_NEAR(rule.weights[1], 8.0 / 9.0, 1e-15);
}

TEST(Quadrature, MonomialExactness) {
  // Exact integral of x^k over [-1, 1]: 0 for odd k, 2/(k+1) for even k.
  for (int q = 1; q <= 10; ++q) {
    const QuadratureRule rule = gauss_rule(q);
    for (int k = 0; k <= 2 * q - 1; ++k) {
      double acc = 0.0;
      for (int g = 0; g < rule.size(); ++g) {
        acc += rule.weights[g] * std::pow(rule.points[g], k);
      }
      const double expected = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
      EXPECT_NEAR(acc, expected, 1e-13) << "q=" << q << " k=" << k;
    }
  }
}

TEST(Quadrature, DetectsInexactnessBeyondOrder) {
  // One-point Gauss integrates x^2 as 0, not 2/3: the order bound is sharp.
  const QuadratureRule rule = gauss_rule(1);
  double acc = 0.0;
  for (int g = 0; g < rule.size(); ++g) {
    acc += rule.weights[g] * rule.points[g] * rule.points[g];
  }
  EXPECT_GT(std::abs(acc - 2.0 / 3.0), 0.1);
}

TEST(Quadrature, UnsupportedOrders) {
  EXPECT_THROW(gauss_rule(0), dgnet::UnsupportedOrderError);
  EXPECT_THROW(gauss_rule(11), dgnet::UnsupportedOrderError);
}
