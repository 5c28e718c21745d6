#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgnet/errors.hpp"

namespace dgnet {

/// Absolute tolerance for distribution-matrix column sums and for initial-data
/// coverage checks.
inline constexpr double kColumnSumTolerance = 1e-12;

enum class BoundaryKind {
  ClosedInlet,   ///< Dirichlet datum 0: nothing enters
  ClosedOutlet,  ///< Dirichlet datum u_max: nothing leaves
  Dirichlet,     ///< fixed exterior density
  FreeOutflow    ///< exterior density copies the interior trace
};

/// Exterior state prescribed at an unattached road end. The same Dirichlet
/// mechanism serves both ends; only the datum differs.
struct BoundaryMode {
  BoundaryKind kind = BoundaryKind::FreeOutflow;
  double value = 0.0;  // Dirichlet density, ignored by the other kinds

  static BoundaryMode closed_inlet() { return {BoundaryKind::ClosedInlet, 0.0}; }
  static BoundaryMode closed_outlet() { return {BoundaryKind::ClosedOutlet, 0.0}; }
  static BoundaryMode dirichlet(double v) { return {BoundaryKind::Dirichlet, v}; }
  static BoundaryMode free_outflow() { return {BoundaryKind::FreeOutflow, 0.0}; }
};

/// Resolve the exterior density a boundary mode prescribes at one end.
inline double boundary_datum(const BoundaryMode& mode, double interior_trace,
                             double u_max) {
  switch (mode.kind) {
    case BoundaryKind::ClosedInlet: return 0.0;
    case BoundaryKind::ClosedOutlet: return u_max;
    case BoundaryKind::Dirichlet: return mode.value;
    case BoundaryKind::FreeOutflow: return interior_trace;
  }
  return interior_trace;
}

/// One constant piece of initial data on [from, to].
struct InitialPiece {
  double from = 0.0;
  double to = 0.0;
  double value = 0.0;
};

struct RoadSpec {
  int id = 0;
  double begin = 0.0;
  double end = 1.0;
  int num_elements = 1;
  std::vector<InitialPiece> initial;
  std::optional<BoundaryMode> left_boundary;
  std::optional<BoundaryMode> right_boundary;

  double length() const { return end - begin; }
};

struct JunctionSpec {
  std::vector<int> incoming;       // road ids, ordered
  std::vector<int> outgoing;       // road ids, ordered
  Eigen::MatrixXd distribution;    // (outgoing x incoming) split fractions
};

struct NetworkSpec {
  std::vector<RoadSpec> roads;
  std::vector<JunctionSpec> junctions;
};

/// Junction with road ids resolved to indices into the validated road list.
struct Junction {
  std::vector<int> incoming;
  std::vector<int> outgoing;
  Eigen::MatrixXd distribution;
};

/// Which junction (if any) each road end is attached to, and at which slot of
/// that junction's road list. The upstream junction feeds the road's left end;
/// the downstream junction consumes its right end.
struct RoadEnds {
  std::optional<int> upstream_junction;
  int upstream_slot = -1;
  std::optional<int> downstream_junction;
  int downstream_slot = -1;
};

/// Immutable, structurally checked network: unique road ids, resolvable and
/// non-duplicated attachments, column-stochastic distribution matrices,
/// covering in-range initial data, and a boundary mode at exactly the
/// unattached road ends.
class ValidatedNetwork {
 public:
  ValidatedNetwork(NetworkSpec spec, std::vector<Junction> junctions,
                   std::vector<RoadEnds> ends,
                   std::unordered_map<int, int> index_by_id)
      : spec_(std::move(spec)),
        junctions_(std::move(junctions)),
        ends_(std::move(ends)),
        index_by_id_(std::move(index_by_id)) {}

  std::span<const RoadSpec> roads() const { return spec_.roads; }
  std::span<const Junction> junctions() const { return junctions_; }
  const RoadEnds& ends(int road_index) const { return ends_.at(road_index); }

  int road_index(int road_id) const {
    auto it = index_by_id_.find(road_id);
    if (it == index_by_id_.end()) {
      throw ValidationError("unknown road id " + std::to_string(road_id));
    }
    return it->second;
  }

  /// Echo of the input the network was validated from.
  const NetworkSpec& spec() const { return spec_; }

 private:
  NetworkSpec spec_;
  std::vector<Junction> junctions_;
  std::vector<RoadEnds> ends_;
  std::unordered_map<int, int> index_by_id_;
};

namespace detail {

inline void validate_road(const RoadSpec& road, double u_max) {
  const std::string label = "road " + std::to_string(road.id);
  if (!(road.end > road.begin)) {
    throw ValidationError(label + ": interval [" + std::to_string(road.begin) +
                          ", " + std::to_string(road.end) + "] is empty");
  }
  if (road.num_elements < 1) {
    throw ValidationError(label + ": needs at least one element");
  }
  if (road.initial.empty()) {
    throw ValidationError(label + ": initial data is missing");
  }
  double cursor = road.begin;
  for (const InitialPiece& piece : road.initial) {
    if (std::abs(piece.from - cursor) > kColumnSumTolerance) {
      throw ValidationError(label + ": initial pieces must tile the interval; gap or overlap at " +
                            std::to_string(piece.from));
    }
    if (!(piece.to > piece.from)) {
      throw ValidationError(label + ": initial piece has empty sub-interval");
    }
    if (!(piece.value >= 0.0 && piece.value <= u_max)) {
      throw RangeError(label + ": initial density " + std::to_string(piece.value) +
                       " outside [0, " + std::to_string(u_max) + "]");
    }
    cursor = piece.to;
  }
  if (std::abs(cursor - road.end) > kColumnSumTolerance) {
    throw ValidationError(label + ": initial pieces stop at " + std::to_string(cursor) +
                          " before the road end " + std::to_string(road.end));
  }
  for (const auto& mode : {road.left_boundary, road.right_boundary}) {
    if (mode && mode->kind == BoundaryKind::Dirichlet &&
        !(mode->value >= 0.0 && mode->value <= u_max)) {
      throw RangeError(label + ": Dirichlet density " + std::to_string(mode->value) +
                       " outside [0, " + std::to_string(u_max) + "]");
    }
  }
}

inline void validate_distribution(const JunctionSpec& junction, std::size_t index) {
  const std::string label = "junction " + std::to_string(index);
  const auto& A = junction.distribution;
  if (A.rows() != static_cast<Eigen::Index>(junction.outgoing.size()) ||
      A.cols() != static_cast<Eigen::Index>(junction.incoming.size())) {
    throw DimensionError(label + ": distribution matrix is " + std::to_string(A.rows()) +
                         "x" + std::to_string(A.cols()) + " but the junction has " +
                         std::to_string(junction.incoming.size()) + " incoming and " +
                         std::to_string(junction.outgoing.size()) + " outgoing roads");
  }
  for (Eigen::Index j = 0; j < A.rows(); ++j)
    for (Eigen::Index i = 0; i < A.cols(); ++i)
      if (!(A(j, i) >= 0.0 && A(j, i) <= 1.0)) {
        throw RangeError(label + ": split fraction " + std::to_string(A(j, i)) +
                         " outside [0, 1]");
      }
  for (Eigen::Index i = 0; i < A.cols(); ++i) {
    const double sum = A.col(i).sum();
    if (std::abs(sum - 1.0) > kColumnSumTolerance) {
      throw ColumnSumError(label + ": column " + std::to_string(i) + " sums to " +
                           std::to_string(sum) + ", expected 1");
    }
  }
}

}  // namespace detail

/// Check a raw network description and freeze it. Validation is idempotent:
/// the spec echoed by the result validates to an equivalent network.
inline ValidatedNetwork validate_network(const NetworkSpec& raw, double u_max) {
  if (raw.roads.empty()) throw ValidationError("network has no roads");

  std::unordered_map<int, int> index_by_id;
  for (std::size_t r = 0; r < raw.roads.size(); ++r) {
    const RoadSpec& road = raw.roads[r];
    if (!index_by_id.emplace(road.id, static_cast<int>(r)).second) {
      throw ValidationError("road id " + std::to_string(road.id) + " appears twice");
    }
    detail::validate_road(road, u_max);
  }

  std::vector<Junction> junctions;
  std::vector<RoadEnds> ends(raw.roads.size());
  junctions.reserve(raw.junctions.size());
  for (std::size_t j = 0; j < raw.junctions.size(); ++j) {
    const JunctionSpec& spec = raw.junctions[j];
    const std::string label = "junction " + std::to_string(j);
    if (spec.incoming.empty() || spec.outgoing.empty()) {
      throw ValidationError(label + ": needs at least one incoming and one outgoing road");
    }
    detail::validate_distribution(spec, j);

    Junction junction;
    junction.distribution = spec.distribution;
    for (std::size_t slot = 0; slot < spec.incoming.size(); ++slot) {
      auto it = index_by_id.find(spec.incoming[slot]);
      if (it == index_by_id.end()) {
        throw ValidationError(label + ": incoming road id " +
                              std::to_string(spec.incoming[slot]) + " does not exist");
      }
      RoadEnds& e = ends[it->second];
      if (e.downstream_junction) {
        throw DuplicateAttachmentError("road " + std::to_string(spec.incoming[slot]) +
                                       " is incoming at more than one junction");
      }
      e.downstream_junction = static_cast<int>(j);
      e.downstream_slot = static_cast<int>(slot);
      junction.incoming.push_back(it->second);
    }
    for (std::size_t slot = 0; slot < spec.outgoing.size(); ++slot) {
      auto it = index_by_id.find(spec.outgoing[slot]);
      if (it == index_by_id.end()) {
        throw ValidationError(label + ": outgoing road id " +
                              std::to_string(spec.outgoing[slot]) + " does not exist");
      }
      RoadEnds& e = ends[it->second];
      if (e.upstream_junction) {
        throw DuplicateAttachmentError("road " + std::to_string(spec.outgoing[slot]) +
                                       " is outgoing at more than one junction");
      }
      e.upstream_junction = static_cast<int>(j);
      e.upstream_slot = static_cast<int>(slot);
      junction.outgoing.push_back(it->second);
    }
    junctions.push_back(std::move(junction));
  }

  for (std::size_t r = 0; r < raw.roads.size(); ++r) {
    const RoadSpec& road = raw.roads[r];
    const std::string label = "road " + std::to_string(road.id);
    if (ends[r].upstream_junction && road.left_boundary) {
      throw ValidationError(label + ": left end is attached to a junction and also has a boundary mode");
    }
    if (!ends[r].upstream_junction && !road.left_boundary) {
      throw DanglingEndpointError(label + ": left end has neither a junction nor a boundary mode");
    }
    if (ends[r].downstream_junction && road.right_boundary) {
      throw ValidationError(label + ": right end is attached to a junction and also has a boundary mode");
    }
    if (!ends[r].downstream_junction && !road.right_boundary) {
      throw DanglingEndpointError(label + ": right end has neither a junction nor a boundary mode");
    }
  }

  return ValidatedNetwork(raw, std::move(junctions), std::move(ends),
                          std::move(index_by_id));
}

}  // namespace dgnet
