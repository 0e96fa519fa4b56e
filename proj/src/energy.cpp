#include "agvsim/energy.hpp"

#include <algorithm>
#include <cmath>

namespace agv {

void consume_leg(EnergyState& state, const ConsumptionModel& model, double mass_kg,
                 double distance_m, double v_start_mps, double v_end_mps, double elapsed_s) {
  double rolling_j = model.rolling_coeff * mass_kg * model.gravity_mps2 * distance_m;
  double kinetic_j = 0.5 * mass_kg * (v_end_mps * v_end_mps - v_start_mps * v_start_mps);

  double consumed_wh = (rolling_j + std::max(0.0, kinetic_j)) / model.drivetrain_efficiency /
                           kJoulesPerWh +
                       model.aux_power_w * elapsed_s / kJoulesPerWh;
  double regen_wh = model.regen_efficiency * std::max(0.0, -kinetic_j) / kJoulesPerWh;

  double net_wh = consumed_wh - regen_wh;
  if (net_wh > state.soc_wh) {
    // Battery dies mid-leg; record only the energy it could deliver.
    consumed_wh = state.soc_wh + regen_wh;
    state.soc_wh = 0.0;
    state.depleted = true;
  } else {
    state.soc_wh -= net_wh;
  }
  state.consumed_wh += consumed_wh;
  state.regenerated_wh += regen_wh;
  state.total_distance_m += distance_m;
}

double range_estimate(const EnergyState& state) {
  constexpr double kMinNetWh = 1.0;  // below this, measurements are noise
  double net = state.consumed_wh - state.regenerated_wh;
  double d_avg = net < kMinNetWh ? state.nominal_d_avg_m_per_wh : state.total_distance_m / net;
  return state.soc_wh * d_avg;
}

bool charge_step(EnergyState& state, const BatterySpec& spec, double elapsed_s,
                 double target_fraction) {
  double target_wh = std::min(spec.capacity_wh, target_fraction * spec.capacity_wh);
  if (state.soc_wh < target_wh) {
    state.soc_wh = std::min(spec.capacity_wh,
                            state.soc_wh + spec.charge_power_w * elapsed_s / kJoulesPerWh);
  }
  if (state.soc_wh > 0.0) state.depleted = false;
  return state.soc_wh >= target_wh;
}

void swap_battery(EnergyState& state, const BatterySpec& spec) {
  state.soc_wh = spec.capacity_wh;
  state.depleted = false;
}

}  // namespace agv
