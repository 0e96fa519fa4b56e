#pragma once

#include <string>

#include "agvsim/plant_graph.hpp"

namespace agv {

/// Builds the bundled synthetic plant: two potlines of 44 pot cells each,
/// two cast houses, three charging stations on a central avenue, one AlF3
/// storage, one waste area, one depot, plus ring roads and crossovers.
/// Every street is a pair of directed edges.
PlantGraph default_map(double reference_speed_mps = PlantGraph::kDefaultReferenceSpeedMps);

/// The same map as JSON text (the bundled data/default_map.json content).
std::string default_map_json_text();

}  // namespace agv
