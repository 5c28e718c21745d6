#pragma once

#include <concepts>

namespace dgnet {

/// Flow-density relation contract. A diagram provides the equilibrium flux
/// f(u), the critical density at which f attains its maximum, the maximal
/// (jam) density, and a bound on |f'| over [0, max_density]. f must be
/// unimodal: non-decreasing up to the critical density, non-increasing after.
template <typename D>
concept FundamentalDiagram = requires(const D d, double u) {
  { d.flux(u) } -> std::convertible_to<double>;
  { d.critical_density() } -> std::convertible_to<double>;
  { d.max_density() } -> std::convertible_to<double>;
  { d.max_wave_speed() } -> std::convertible_to<double>;
};

/// Greenshields parabola f(u) = v_max * u * (1 - u / u_max).
struct Greenshields {
  double v_max = 1.0;
  double u_max = 1.0;

  double flux(double u) const { return v_max * u * (1.0 - u / u_max); }

  // The maximizer of the parabola, analytically u_max / 2.
  double critical_density() const { return 0.5 * u_max; }

  double max_density() const { return u_max; }

  double max_flow() const { return 0.25 * v_max * u_max; }

  // |f'(u)| = v_max * |1 - 2u/u_max| <= v_max on [0, u_max].
  double max_wave_speed() const { return v_max; }
};

}  // namespace dgnet
