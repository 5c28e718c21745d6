#include <gtest/gtest.h>

#include "dgnet/fundamental_diagram.hpp"

using dgnet::Greenshields;

TEST(FundamentalDiagram, GreenshieldsValues) {
  const Greenshields d{1.0, 1.0};
  EXPECT_DOUBLE_EQ(d.flux(0.0), 0.0);
  EXPECT_DOUBLE_EQ(d.flux(1.0), 0.0);
  EXPECT_DOUBLE_EQ(d.flux(0.5), 0.25);
  EXPECT_DOUBLE_EQ(d.flux(0.75), 0.1875);
  EXPECT_DOUBLE_EQ(d.critical_density(), 0.5);
  EXPECT_DOUBLE_EQ(d.max_density(), 1.0);
  EXPECT_DOUBLE_EQ(d.max_flow(), 0.25);
  EXPECT_DOUBLE_EQ(d.max_wave_speed(), 1.0);
}

TEST(FundamentalDiagram, ScaledParameters) {
  const Greenshields d{2.0, 3.0};
  EXPECT_DOUBLE_EQ(d.critical_density(), 1.5);
  EXPECT_DOUBLE_EQ(d.flux(1.5), 1.5);
  EXPECT_DOUBLE_EQ(d.max_flow(), 1.5);
  EXPECT_DOUBLE_EQ(d.flux(3.0), 0.0);
  // symmetry of the parabola around the critical density
  EXPECT_DOUBLE_EQ(d.flux(1.0), d.flux(2.0));
}

TEST(FundamentalDiagram, Unimodal) {
  const Greenshields d{1.0, 1.0};
  const int samples = 500;
  for (int i = 0; i + 1 <= samples; ++i) {
    const double a = static_cast<double>(i) / samples;
    const double b = static_cast<double>(i + 1) / samples;
    if (b <= d.critical_density()) {
      EXPECT_LE(d.flux(a), d.flux(b)) << "not increasing at " << a;
    }
    if (a >= d.critical_density()) {
      EXPECT_GE(d.flux(a), d.flux(b)) << "not decreasing at " << a;
    }
    EXPECT_LE(d.flux(a), d.max_flow() + 1e-15);
    EXPECT_GE(d.flux(a), 0.0);
  }
}
