#pragma once

#include <vector>

#include "dgnet/dg_state.hpp"

namespace dgnet {

struct Snapshot {
  double t = 0.0;
  NetworkState states;
};

/// Recorded states at the output stride; the first snapshot is t = 0, the
/// last is the final state.
struct Trajectory {
  std::vector<Snapshot> snapshots;

  const Snapshot& final_snapshot() const { return snapshots.back(); }
};

}  // namespace dgnet
