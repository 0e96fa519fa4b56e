#pragma once

namespace agv {

/// Battery parameters shared by all vehicle classes (capacity 80 kWh).
struct BatterySpec {
  double capacity_wh = 80000.0;
  double charge_power_w = 15000.0;
  double swap_duration_s = 600.0;
  double low_soc_threshold = 0.20;   // below this a full charge is forced
  double idle_charge_target = 0.50;  // brief top-up target while idle
};

/// Traction energy model: rolling resistance plus kinetic-energy deltas
/// through a drivetrain efficiency, partial recovery of braking energy, and
/// a flat auxiliary draw while moving. No aero drag; plant speeds stay under
/// 22 km/h.
struct ConsumptionModel {
  double rolling_coeff = 0.01;
  double gravity_mps2 = 9.81;
  double drivetrain_efficiency = 0.85;
  double regen_efficiency = 0.5;
  double aux_power_w = 2000.0;
};

/// Per-vehicle battery and odometer state. Cumulative counters feed the
/// adaptive range estimate and never decrease.
struct EnergyState {
  double soc_wh = 0.0;
  double total_distance_m = 0.0;
  double consumed_wh = 0.0;
  double regenerated_wh = 0.0;
  double nominal_d_avg_m_per_wh = 2.0;  // cold-start prior
  bool depleted = false;
};

constexpr double kJoulesPerWh = 3600.0;

/// Applies one driving leg. Consumption:
///   (rolling + max(0, kinetic gain)) / drivetrain_efficiency + aux * elapsed
/// Regeneration: regen_efficiency * max(0, kinetic loss).
/// SOC drops by the net draw, clamping at zero with the depleted flag set;
/// on depletion the consumed counter records only what the battery could
/// actually deliver so energy accounting stays closed.
void consume_leg(EnergyState& state, const ConsumptionModel& model, double mass_kg,
                 double distance_m, double v_start_mps, double v_end_mps, double elapsed_s);

/// Remaining driving range in metres: SOC times the measured metres per Wh
/// (total distance over net consumption). Falls back to the nominal prior
/// until at least 1 Wh of net history exists.
double range_estimate(const EnergyState& state);

/// Advances plug charging by `elapsed_s` toward `target_fraction` of
/// capacity. Returns true once the target (or full capacity) is reached.
bool charge_step(EnergyState& state, const BatterySpec& spec, double elapsed_s,
                 double target_fraction = 1.0);

/// Installs a fully charged pack. History counters are untouched so the
/// range estimate survives the swap. The swap duration is modelled by the
/// caller as station occupancy time.
void swap_battery(EnergyState& state, const BatterySpec& spec);

}  // namespace agv
