#include "agvsim/map_gen.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace agv {

namespace {

struct Builder {
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  int add_node(std::string id, NodeKind kind, double x, double y) {
    nodes.push_back({std::move(id), kind, x, y});
    return static_cast<int>(nodes.size()) - 1;
  }

  // One street = two directed edges.
  void add_street(int a, int b, double speed_mps) {
    double dx = nodes[a].x_m - nodes[b].x_m;
    double dy = nodes[a].y_m - nodes[b].y_m;
    double len = std::hypot(dx, dy);
    add_directed(a, b, len, speed_mps);
    add_directed(b, a, len, speed_mps);
  }

  void add_directed(int a, int b, double len, double speed_mps) {
    Edge e;
    e.id = "e:" + nodes[a].id + ">" + nodes[b].id;
    e.from = a;
    e.to = b;
    e.length_m = len;
    e.speed_limit_mps = speed_mps;
    edges.push_back(std::move(e));
  }
};

std::string pot_id(int line, int k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "pot_%d_%02d", line, k);
  return buf;
}

}  // namespace

PlantGraph default_map(double reference_speed_mps) {
  constexpr int kPotsPerLine = 44;
  constexpr double kPotSpacing = 15.0;
  constexpr double kCorridorSpeed = 15.0 / 3.6;
  constexpr double kAvenueSpeed = 15.0 / 3.6;
  constexpr double kRingSpeed = 25.0 / 3.6;

  Builder b;

  // Potline corridors, pots chained west to east.
  const double line_y[2] = {120.0, 280.0};
  int pots[2][kPotsPerLine];
  int jw[2], je[2];
  for (int line = 0; line < 2; ++line) {
    jw[line] = b.add_node("j_w_" + std::to_string(line), NodeKind::Junction, 45.0, line_y[line]);
    for (int k = 0; k < kPotsPerLine; ++k) {
      pots[line][k] =
          b.add_node(pot_id(line, k), NodeKind::PotCell, 75.0 + k * kPotSpacing, line_y[line]);
    }
    je[line] = b.add_node("j_e_" + std::to_string(line), NodeKind::Junction, 750.0, line_y[line]);
    b.add_street(jw[line], pots[line][0], kCorridorSpeed);
    for (int k = 0; k + 1 < kPotsPerLine; ++k) {
      b.add_street(pots[line][k], pots[line][k + 1], kCorridorSpeed);
    }
    b.add_street(pots[line][kPotsPerLine - 1], je[line], kCorridorSpeed);
  }

  // Central avenue between the potlines; charging stations sit centrally.
  int jc_w = b.add_node("j_c_w", NodeKind::Junction, 45.0, 200.0);
  int cs0 = b.add_node("cs_0", NodeKind::ChargingStation, 180.0, 200.0);
  int alf = b.add_node("alf3_0", NodeKind::Alf3Storage, 290.0, 200.0);
  int cs1 = b.add_node("cs_1", NodeKind::ChargingStation, 400.0, 200.0);
  int waste = b.add_node("waste_0", NodeKind::WasteArea, 510.0, 200.0);
  int cs2 = b.add_node("cs_2", NodeKind::ChargingStation, 620.0, 200.0);
  int jc_e = b.add_node("j_c_e", NodeKind::Junction, 750.0, 200.0);
  b.add_street(jc_w, cs0, kAvenueSpeed);
  b.add_street(cs0, alf, kAvenueSpeed);
  b.add_street(alf, cs1, kAvenueSpeed);
  b.add_street(cs1, waste, kAvenueSpeed);
  b.add_street(waste, cs2, kAvenueSpeed);
  b.add_street(cs2, jc_e, kAvenueSpeed);
  b.add_street(jw[0], jc_w, kAvenueSpeed);
  b.add_street(jc_w, jw[1], kAvenueSpeed);
  b.add_street(je[0], jc_e, kAvenueSpeed);
  b.add_street(jc_e, je[1], kAvenueSpeed);

  // Crossovers from mid-potline down/up to the avenue stations.
  b.add_street(pots[0][7], cs0, kAvenueSpeed);
  b.add_street(pots[1][7], cs0, kAvenueSpeed);
  b.add_street(pots[0][21], cs1, kAvenueSpeed);
  b.add_street(pots[1][21], cs1, kAvenueSpeed);
  b.add_street(pots[0][36], cs2, kAvenueSpeed);
  b.add_street(pots[1][36], cs2, kAvenueSpeed);

  // South ring: cast houses and the depot.
  int jr_sw = b.add_node("j_s_w", NodeKind::Junction, 45.0, 40.0);
  int cast0 = b.add_node("cast_0", NodeKind::CastHouse, 250.0, 40.0);
  int depot = b.add_node("depot_0", NodeKind::Depot, 420.0, 40.0);
  int cast1 = b.add_node("cast_1", NodeKind::CastHouse, 590.0, 40.0);
  int jr_se = b.add_node("j_s_e", NodeKind::Junction, 750.0, 40.0);
  b.add_street(jr_sw, cast0, kRingSpeed);
  b.add_street(cast0, depot, kRingSpeed);
  b.add_street(depot, cast1, kRingSpeed);
  b.add_street(cast1, jr_se, kRingSpeed);
  b.add_street(jw[0], jr_sw, kRingSpeed);
  b.add_street(je[0], jr_se, kRingSpeed);
  b.add_street(pots[0][11], cast0, kRingSpeed);
  b.add_street(pots[0][34], cast1, kRingSpeed);

  // North ring for alternate routing.
  int jr_nw = b.add_node("j_n_w", NodeKind::Junction, 45.0, 360.0);
  int jr_n1 = b.add_node("j_n_1", NodeKind::Junction, 300.0, 360.0);
  int jr_n2 = b.add_node("j_n_2", NodeKind::Junction, 550.0, 360.0);
  int jr_ne = b.add_node("j_n_e", NodeKind::Junction, 750.0, 360.0);
  b.add_street(jr_nw, jr_n1, kRingSpeed);
  b.add_street(jr_n1, jr_n2, kRingSpeed);
  b.add_street(jr_n2, jr_ne, kRingSpeed);
  b.add_street(jw[1], jr_nw, kRingSpeed);
  b.add_street(je[1], jr_ne, kRingSpeed);
  b.add_street(pots[1][15], jr_n1, kRingSpeed);
  b.add_street(pots[1][31], jr_n2, kRingSpeed);

  PlantGraph g(std::move(b.nodes), std::move(b.edges), reference_speed_mps);
  g.validate();
  return g;
}

std::string default_map_json_text() {
  return default_map().to_json_text();
}

}  // namespace agv
