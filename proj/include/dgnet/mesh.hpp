#pragma once

#include <vector>

#include "dgnet/network.hpp"

namespace dgnet {

/// Uniform 1D mesh of one road: nodes x_0 < ... < x_N.
struct Mesh {
  int road_id = 0;
  std::vector<double> nodes;

  int num_elements() const { return static_cast<int>(nodes.size()) - 1; }
  double element_size(int k) const { return nodes[k + 1] - nodes[k]; }
  double element_center(int k) const { return 0.5 * (nodes[k] + nodes[k + 1]); }
  double total_length() const { return nodes.back() - nodes.front(); }

  /// Affine map of x in element k to the reference coordinate xi in [-1, 1].
  double to_reference(int k, double x) const {
    return (2.0 * x - nodes[k] - nodes[k + 1]) / element_size(k);
  }
  double from_reference(int k, double xi) const {
    return element_center(k) + 0.5 * element_size(k) * xi;
  }
};

inline Mesh build_mesh(const RoadSpec& road) {
  Mesh mesh;
  mesh.road_id = road.id;
  const int n = road.num_elements;
  mesh.nodes.resize(n + 1);
  const double h = road.length() / n;
  for (int i = 0; i <= n; ++i) mesh.nodes[i] = road.begin + i * h;
  mesh.nodes[n] = road.end;  // pin the last node against accumulated rounding
  return mesh;
}

}  // namespace dgnet
