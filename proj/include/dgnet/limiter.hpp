#pragma once

#include <algorithm>
#include <cmath>

#include "dgnet/dg_state.hpp"
#include "dgnet/mesh.hpp"

namespace dgnet {

/// Smallest-magnitude value if all three arguments share a sign, else zero.
inline double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

/// TVB modified minmod limiter for piecewise-linear states. An element keeps
/// its slope when |2 c_1| <= M h_K^2; otherwise the slope is replaced by
/// minmod(2 c_1, forward average difference, backward average difference) / 2.
/// Where a neighbor is missing (road ends, junction-adjacent elements) the
/// element's own 2 c_1 substitutes for that difference, so a single-element
/// road is never altered. Cell averages are untouched.
inline void apply_minmod_limiter(DGState& state, const Mesh& mesh, double tvb_m) {
  if (state.degree > 1) {
    throw UnsupportedDegreeError("minmod limiter is implemented for degree <= 1");
  }
  if (state.degree < 1) return;
  const int n = state.num_elements();
  for (int k = 0; k < n; ++k) {
    const double two_s = 2.0 * state.coeffs(k, 1);
    const double h = mesh.element_size(k);
    if (std::abs(two_s) <= tvb_m * h * h) continue;
    const double forward =
        (k + 1 < n) ? state.coeffs(k + 1, 0) - state.coeffs(k, 0) : two_s;
    const double backward =
        (k > 0) ? state.coeffs(k, 0) - state.coeffs(k - 1, 0) : two_s;
    state.coeffs(k, 1) = 0.5 * minmod(two_s, forward, backward);
  }
}

/// Outcome of one bounds-enforcement sweep. mass_correction is the signed
/// mass added by average clamps (zero when only slopes were rescaled).
struct BoundsReport {
  long clamped_elements = 0;
  long rescaled_elements = 0;
  double mass_correction = 0.0;
};

/// Running totals of bounds enforcement over a simulation.
struct BoundsLedger {
  long violations = 0;
  long rescales = 0;
  double mass_correction = 0.0;

  void add(const BoundsReport& r) {
    violations += r.clamped_elements;
    rescales += r.rescaled_elements;
    mass_correction += r.mass_correction;
  }
};

/// Pull element endpoint traces into [0, u_max]. If the cell average is in
/// range, the slope is scaled by the largest theta in [0, 1] that puts both
/// traces in range (mass preserved). If the average itself left the range,
/// the element is set to the nearest bound; that path creates or destroys
/// mass and is reported.
inline BoundsReport enforce_bounds(DGState& state, const Mesh& mesh, double u_max) {
  if (state.degree > 1) {
    throw UnsupportedDegreeError("bounds enforcement is implemented for degree <= 1");
  }
  BoundsReport report;
  const int n = state.num_elements();
  for (int k = 0; k < n; ++k) {
    const double avg = state.coeffs(k, 0);
    if (avg < 0.0 || avg > u_max) {
      const double target = avg < 0.0 ? 0.0 : u_max;
      report.clamped_elements += 1;
      report.mass_correction += (target - avg) * mesh.element_size(k);
      state.coeffs(k, 0) = target;
      if (state.degree >= 1) state.coeffs(k, 1) = 0.0;
      continue;
    }
    if (state.degree < 1) continue;
    const double amp = std::abs(state.coeffs(k, 1));
    if (amp == 0.0) continue;
    const double room_up = u_max - avg;
    const double room_down = avg;
    const double theta = std::min({1.0, room_up / amp, room_down / amp});
    if (theta < 1.0) {
      state.coeffs(k, 1) *= theta;
      report.rescaled_elements += 1;
    }
  }
  return report;
}

}  // namespace dgnet
