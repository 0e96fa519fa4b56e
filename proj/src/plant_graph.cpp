#include "agvsim/plant_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace agv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::PotCell: return "pot_cell";
    case NodeKind::CastHouse: return "cast_house";
    case NodeKind::ChargingStation: return "charging_station";
    case NodeKind::Alf3Storage: return "alf3_storage";
    case NodeKind::WasteArea: return "waste_area";
    case NodeKind::Depot: return "depot";
    case NodeKind::Junction: return "junction";
  }
  return "junction";
}

std::optional<NodeKind> node_kind_from_string(std::string_view s) {
  static const std::pair<std::string_view, NodeKind> table[] = {
      {"pot_cell", NodeKind::PotCell},
      {"cast_house", NodeKind::CastHouse},
      {"charging_station", NodeKind::ChargingStation},
      {"alf3_storage", NodeKind::Alf3Storage},
      {"waste_area", NodeKind::WasteArea},
      {"depot", NodeKind::Depot},
      {"junction", NodeKind::Junction},
  };
  for (const auto& [name, kind] : table) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

double forget_value(const VisitState& state, const DecayParams& params, double now_s) {
  if (state.visit_count == 0) return 0.0;
  double elapsed = now_s - state.last_visit_s;
  double exponent = params.steepness_per_s * (elapsed - params.half_life_offset_s);
  // exp() overflows past ~709; the value has long converged to 1 there.
  if (exponent > 500.0) return 1.0;
  return 1.0 + state.value_at_last_visit / (1.0 + std::exp(exponent));
}

VisitState apply_traversal(const VisitState& state, const DecayParams& params, double now_s) {
  VisitState next;
  next.value_at_last_visit = forget_value(state, params, now_s) + params.visit_increment;
  next.last_visit_s = now_s;
  next.visit_count = state.visit_count + 1;
  return next;
}

PlantGraph::PlantGraph(std::vector<Node> nodes, std::vector<Edge> edges,
                       double reference_speed_mps) {
  // Intern in lexicographic id order so index order is file-order
  // independent; edge endpoints index the caller's node vector and are
  // remapped to the sorted order here.
  const int n = static_cast<int>(nodes.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return nodes[a].id < nodes[b].id; });
  std::vector<int> new_index(n, -1);
  nodes_.reserve(n);
  for (int pos = 0; pos < n; ++pos) {
    new_index[order[pos]] = pos;
    nodes_.push_back(std::move(nodes[order[pos]]));
  }

  edges_ = std::move(edges);
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (Edge& e : edges_) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw MapLoadError("edge " + e.id + ": endpoint out of range");
    }
    e.from = new_index[e.from];
    e.to = new_index[e.to];
    if (e.length_m <= 0.0) {
      throw MapLoadError("edge " + e.id + ": length must be > 0");
    }
    if (e.speed_limit_mps <= 0.0) {
      throw MapLoadError("edge " + e.id + ": speed_limit must be > 0");
    }
    e.base_time_s = e.length_m / std::min(e.speed_limit_mps, reference_speed_mps);
  }

  build_index();
}

void PlantGraph::build_index() {
  node_by_id_.clear();
  edge_by_id_.clear();
  by_kind_.clear();
  for (int i = 0; i < node_count(); ++i) {
    if (!node_by_id_.emplace(nodes_[i].id, i).second) {
      throw MapLoadError("duplicate node id: " + nodes_[i].id);
    }
    by_kind_[static_cast<int>(nodes_[i].kind)].push_back(i);
  }
  out_edges_.assign(nodes_.size(), {});
  for (int i = 0; i < edge_count(); ++i) {
    Edge& e = edges_[i];
    if (!edge_by_id_.emplace(e.id, i).second) {
      throw MapLoadError("duplicate edge id: " + e.id);
    }
    if (e.from < 0 || e.from >= node_count() || e.to < 0 || e.to >= node_count()) {
      throw MapLoadError("edge " + e.id + ": endpoint out of range");
    }
    out_edges_[e.from].push_back(i);
  }
}

int PlantGraph::node_index(std::string_view id) const {
  auto it = node_by_id_.find(std::string(id));
  return it == node_by_id_.end() ? -1 : it->second;
}

int PlantGraph::edge_index(std::string_view id) const {
  auto it = edge_by_id_.find(std::string(id));
  return it == edge_by_id_.end() ? -1 : it->second;
}

std::span<const int> PlantGraph::out_edges(int node) const {
  return out_edges_[node];
}

const std::vector<int>& PlantGraph::nodes_of_kind(NodeKind kind) const {
  static const std::vector<int> empty;
  auto it = by_kind_.find(static_cast<int>(kind));
  return it == by_kind_.end() ? empty : it->second;
}

double PlantGraph::edge_visit_value(int edge, double now_s) const {
  return forget_value(edges_[edge].visit, decay_, now_s);
}

void PlantGraph::record_traversal(int edge, double now_s) {
  edges_[edge].visit = apply_traversal(edges_[edge].visit, decay_, now_s);
}

void PlantGraph::occupy_edge(int edge, int vehicle_id) {
  auto& occ = edges_[edge].occupied_by;
  if (std::find(occ.begin(), occ.end(), vehicle_id) == occ.end()) {
    occ.push_back(vehicle_id);
  }
}

void PlantGraph::release_edge(int edge, int vehicle_id) {
  auto& occ = edges_[edge].occupied_by;
  occ.erase(std::remove(occ.begin(), occ.end(), vehicle_id), occ.end());
}

double PlantGraph::effective_traverse_time(int edge, const CostWeights& weights,
                                           double now_s) const {
  const Edge& e = edges_[edge];
  double penalty = e.occupied_by.empty() ? 0.0 : weights.occupancy;
  return e.base_time_s * (1.0 + weights.visit * forget_value(e.visit, decay_, now_s) + penalty);
}

RouteTree PlantGraph::route_tree(int from, const CostWeights& weights, double now_s) const {
  RouteTree tree;
  tree.source = from;
  tree.time_s.assign(nodes_.size(), kInf);
  tree.length_m.assign(nodes_.size(), kInf);
  tree.parent_edge.assign(nodes_.size(), -1);
  tree.time_s[from] = 0.0;
  tree.length_m[from] = 0.0;

  using Entry = std::pair<double, int>;  // (cost, node); lower node wins ties
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  heap.emplace(0.0, from);
  std::vector<char> done(nodes_.size(), 0);

  while (!heap.empty()) {
    auto [cost, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int ei : out_edges_[u]) {
      const Edge& e = edges_[ei];
      double w = effective_traverse_time(ei, weights, now_s);
      double nc = cost + w;
      if (nc < tree.time_s[e.to]) {
        tree.time_s[e.to] = nc;
        tree.length_m[e.to] = tree.length_m[u] + e.length_m;
        tree.parent_edge[e.to] = ei;
        heap.emplace(nc, e.to);
      }
    }
  }
  return tree;
}

std::optional<Path> PlantGraph::path_from_tree(const RouteTree& tree, int to) const {
  if (tree.time_s[to] == kInf) return std::nullopt;
  Path path;
  path.total_time_s = tree.time_s[to];
  path.total_length_m = tree.length_m[to];
  for (int v = to; v != tree.source;) {
    int ei = tree.parent_edge[v];
    path.edges.push_back(ei);
    v = edges_[ei].from;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

std::optional<Path> PlantGraph::shortest_path(int from, int to, const CostWeights& weights,
                                              double now_s) const {
  if (from == to) return Path{};
  RouteTree tree = route_tree(from, weights, now_s);
  return path_from_tree(tree, to);
}

double PlantGraph::path_visit_sum(const Path& path, double now_s) const {
  double sum = 0.0;
  for (int ei : path.edges) sum += forget_value(edges_[ei].visit, decay_, now_s);
  return sum;
}

PlantGraph::LeastVisited PlantGraph::least_visited_target(double now_s) const {
  LeastVisited best;
  for (int i = 0; i < edge_count(); ++i) {
    double v = forget_value(edges_[i].visit, decay_, now_s);
    if (best.edge < 0 || v < best.value) {
      best = {i, edges_[i].to, v};
    }
  }
  return best;
}

std::vector<int> PlantGraph::edges_by_visit_value(double now_s) const {
  std::vector<std::pair<double, int>> keyed;
  keyed.reserve(edges_.size());
  for (int i = 0; i < edge_count(); ++i) {
    keyed.emplace_back(forget_value(edges_[i].visit, decay_, now_s), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> order;
  order.reserve(keyed.size());
  for (const auto& [v, i] : keyed) order.push_back(i);
  return order;
}

void PlantGraph::validate() const {
  std::vector<int> depots = nodes_of_kind(NodeKind::Depot);
  for (int depot : depots) {
    std::vector<char> seen(nodes_.size(), 0);
    std::queue<int> bfs;
    bfs.push(depot);
    seen[depot] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int ei : out_edges_[u]) {
        int v = edges_[ei].to;
        if (!seen[v]) {
          seen[v] = 1;
          bfs.push(v);
        }
      }
    }
    for (int i = 0; i < node_count(); ++i) {
      if (nodes_[i].kind != NodeKind::Junction && !seen[i]) {
        throw MapLoadError("node " + nodes_[i].id + " not reachable from depot " +
                           nodes_[depot].id);
      }
    }
  }
}

namespace {

void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw MapLoadError("unknown key '" + it.key() + "' in " + where);
  }
}

}  // namespace

PlantGraph PlantGraph::from_json_text(const std::string& text, double reference_speed_mps) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MapLoadError(std::string("map parse error: ") + e.what());
  }
  if (!doc.is_object()) throw MapLoadError("map root must be an object");
  reject_unknown_keys(doc, {"nodes", "edges"}, "map root");
  if (!doc.contains("nodes") || !doc.contains("edges")) {
    throw MapLoadError("map requires 'nodes' and 'edges' arrays");
  }

  std::vector<Node> nodes;
  std::vector<std::tuple<std::string, std::string, std::string, double, double>> raw_edges;
  try {
    for (const auto& jn : doc["nodes"]) {
      reject_unknown_keys(jn, {"id", "kind", "x", "y"}, "node");
      Node n;
      n.id = jn.at("id").get<std::string>();
      auto kind = node_kind_from_string(jn.at("kind").get<std::string>());
      if (!kind) throw MapLoadError("node " + n.id + ": unknown kind");
      n.kind = *kind;
      n.x_m = jn.at("x").get<double>();
      n.y_m = jn.at("y").get<double>();
      nodes.push_back(std::move(n));
    }
    for (const auto& je : doc["edges"]) {
      reject_unknown_keys(je, {"id", "from", "to", "length_m", "speed_limit_mps"}, "edge");
      raw_edges.emplace_back(je.at("id").get<std::string>(),
                             je.at("from").get<std::string>(),
                             je.at("to").get<std::string>(),
                             je.at("length_m").get<double>(),
                             je.at("speed_limit_mps").get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw MapLoadError(std::string("map field error: ") + e.what());
  }

  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) idx[nodes[i].id] = i;

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (auto& [id, from, to, len, lim] : raw_edges) {
    auto fit = idx.find(from);
    auto tit = idx.find(to);
    if (fit == idx.end()) throw MapLoadError("edge " + id + ": unknown node " + from);
    if (tit == idx.end()) throw MapLoadError("edge " + id + ": unknown node " + to);
    Edge e;
    e.id = id;
    e.from = fit->second;
    e.to = tit->second;
    e.length_m = len;
    e.speed_limit_mps = lim;
    edges.push_back(std::move(e));
  }

  PlantGraph g(std::move(nodes), std::move(edges), reference_speed_mps);
  g.validate();
  return g;
}

PlantGraph PlantGraph::from_json_file(const std::string& path, double reference_speed_mps) {
  std::ifstream in(path);
  if (!in) throw MapLoadError("cannot open map file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), reference_speed_mps);
}

std::string PlantGraph::to_json_text() const {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (const Node& n : nodes_) {
    doc["nodes"].push_back({{"id", n.id},
                            {"kind", to_string(n.kind)},
                            {"x", n.x_m},
                            {"y", n.y_m}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : edges_) {
    doc["edges"].push_back({{"id", e.id},
                            {"from", nodes_[e.from].id},
                            {"to", nodes_[e.to].id},
                            {"length_m", e.length_m},
                            {"speed_limit_mps", e.speed_limit_mps}});
  }
  return doc.dump(2);
}

}  // namespace agv
