#pragma once

namespace agv {

/// Tunable weights for centralized selection, decentralized task choice and
/// dynamic routing. All dimensionless and non-negative.
struct CostWeights {
  // Centralized (plant manager) vehicle selection.
  double autonomy = 1.0;        // margin between range and required distance
  double proximity = 1000.0;    // inverse task-distance reward
  double ffv_load = 0.1;        // reward per kg of AlF3 already on an FFV

  // Decentralized (per-vehicle) idle-task choice.
  double soc = 0.001;           // per Wh of charge, pushes full vehicles away from chargers
  double distance = 0.01;       // per meter of route plus route visit sum
  double surveillance = 2.0;    // per unit of the minimum visit value
  double refill_load = 0.01;    // per kg of AlF3 on board, deprioritizes refill when loaded

  // Dynamic routing.
  double visit = 0.1;           // scales an edge's decayed visit value
  double occupancy = 2.0;       // flat penalty when another vehicle is on the edge
};

}  // namespace agv
