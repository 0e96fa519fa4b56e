#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "agvsim/cost_weights.hpp"

namespace agv {

enum class NodeKind {
  PotCell,
  CastHouse,
  ChargingStation,
  Alf3Storage,
  WasteArea,
  Depot,
  Junction,
};

const char* to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view s);

/// Per-edge visit bookkeeping. `value_at_last_visit` stores the visit value
/// frozen at `last_visit_s`; the current value is always obtained through
/// forget_value(). Never-visited edges (visit_count == 0) report value 0.
struct VisitState {
  double value_at_last_visit = 0.0;
  double last_visit_s = 0.0;
  long visit_count = 0;
};

/// Parameters of the logistic visit-value decay.
struct DecayParams {
  double steepness_per_s = 0.01;     // decay speed rate
  double half_life_offset_s = 600.0; // elapsed time at which the value halves
  double visit_increment = 1.0;      // added on each completed traversal
};

/// Decayed visit value at `now_s`:
///   1 + value_prev / (1 + exp(steepness * (now - last - half_life_offset)))
/// for visited states; 0 for never-visited states. Pure function.
double forget_value(const VisitState& state, const DecayParams& params, double now_s);

/// Visit state after completing a traversal at `now_s`: the decayed value
/// plus the per-traversal increment, with the visit clock and count advanced.
VisitState apply_traversal(const VisitState& state, const DecayParams& params, double now_s);

struct Node {
  std::string id;
  NodeKind kind = NodeKind::Junction;
  double x_m = 0.0;
  double y_m = 0.0;
};

struct Edge {
  std::string id;
  int from = -1;
  int to = -1;
  double length_m = 0.0;
  double speed_limit_mps = 0.0;
  double base_time_s = 0.0;  // length / min(speed_limit, reference speed)
  VisitState visit;
  std::vector<int> occupied_by;  // ids of vehicles currently on the edge
};

/// Route as an ordered edge sequence with totals computed at query time.
struct Path {
  std::vector<int> edges;
  double total_time_s = 0.0;
  double total_length_m = 0.0;
  bool empty() const { return edges.empty(); }
};

struct MapLoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest-path tree from one source, edge costs frozen at the query time.
/// Supports cheap extraction of routes to many targets from a single search.
struct RouteTree {
  int source = -1;
  std::vector<double> time_s;    // +inf where unreachable
  std::vector<double> length_m;
  std::vector<int> parent_edge;  // -1 at source / unreachable
};

/// Directed plant graph. Nodes and edges are interned to dense indices in
/// lexicographic id order, which every tie-break below relies on.
class PlantGraph {
 public:
  PlantGraph() = default;
  PlantGraph(std::vector<Node> nodes, std::vector<Edge> edges,
             double reference_speed_mps);

  static constexpr double kDefaultReferenceSpeedMps = 15.0 / 3.6;

  static PlantGraph from_json_text(const std::string& text,
                                   double reference_speed_mps = kDefaultReferenceSpeedMps);
  static PlantGraph from_json_file(const std::string& path,
                                   double reference_speed_mps = kDefaultReferenceSpeedMps);
  std::string to_json_text() const;

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  const Edge& edge(int i) const { return edges_[i]; }
  int node_index(std::string_view id) const;  // -1 when absent
  int edge_index(std::string_view id) const;
  std::span<const int> out_edges(int node) const;
  const std::vector<int>& nodes_of_kind(NodeKind kind) const;

  void set_decay_params(const DecayParams& p) { decay_ = p; }
  const DecayParams& decay_params() const { return decay_; }

  /// Current decayed visit value of an edge.
  double edge_visit_value(int edge, double now_s) const;

  /// Records a completed traversal at `now_s`.
  void record_traversal(int edge, double now_s);

  void occupy_edge(int edge, int vehicle_id);
  void release_edge(int edge, int vehicle_id);

  /// Dynamic traverse time:
  ///   base_time * (1 + visit_weight * visit_value + occupancy_penalty)
  /// where the occupancy penalty applies only while some vehicle is on the
  /// edge.
  double effective_traverse_time(int edge, const CostWeights& weights, double now_s) const;

  /// Minimum-effective-traverse-time path with costs snapshot at `now_s`.
  /// Deterministic: cost ties resolve toward the lower node index.
  /// nullopt when `to` is unreachable from `from`.
  std::optional<Path> shortest_path(int from, int to, const CostWeights& weights,
                                    double now_s) const;

  /// Full single-source search; pair with path_from_tree().
  RouteTree route_tree(int from, const CostWeights& weights, double now_s) const;
  std::optional<Path> path_from_tree(const RouteTree& tree, int to) const;

  /// Sum of decayed visit values over the path's edges.
  double path_visit_sum(const Path& path, double now_s) const;

  struct LeastVisited {
    int edge = -1;
    int node = -1;   // head node of that edge
    double value = 0.0;
  };

  /// Edge with the minimum decayed visit value (ties: smallest edge id) and
  /// the node it leads to.
  LeastVisited least_visited_target(double now_s) const;

  /// Edge indices ordered by ascending (decayed visit value, edge id).
  std::vector<int> edges_by_visit_value(double now_s) const;

  /// Checks id uniqueness, positive geometry and that every non-junction
  /// node is reachable from every depot. Throws MapLoadError.
  void validate() const;

 private:
  void build_index();

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_edges_;
  std::unordered_map<std::string, int> node_by_id_;
  std::unordered_map<std::string, int> edge_by_id_;
  std::unordered_map<int, std::vector<int>> by_kind_;
  DecayParams decay_;
};

}  // namespace agv
