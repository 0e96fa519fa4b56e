#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace agv {

enum class VehicleClass { Ffv, Aptv, Mtv };
constexpr int kNumClasses = 3;

/// The ten vehicle states. Idle group: LookForEvents (decision hub),
/// Surveillance, IdleCharging, Alf3Refill. Charge group: ChargeBrain
/// (station selection and approach), ChargeAgv (docked, charging to full).
/// Routine group: one plant task per class, plus the garbage task for APTVs.
enum class VehicleState {
  LookForEvents,
  Surveillance,
  IdleCharging,
  Alf3Refill,
  ChargeBrain,
  ChargeAgv,
  PotRefill,
  AnodeReplace,
  GarbageTask,
  CollectAluminium,
};
constexpr int kNumStates = 10;

/// Transition alphabet. Bc asserts when SOC drops below the low threshold;
/// Vel asserts for an FFV with an empty tank; G is the garbage variant of a
/// centrally issued task.
enum class Symbol { Pm, Dtm, Bc, Vel, Tc, G };
constexpr int kNumSymbols = 6;

/// Target of a decentralized (Dtm) transition; chosen by the dispatcher.
enum class DtmChoice { Surveillance, Charge, Refill };

const char* to_string(VehicleClass c);
const char* to_string(VehicleState s);  // stable snake_case, CSV contract
const char* to_string(Symbol s);

std::optional<VehicleClass> vehicle_class_from_string(std::string_view s);

bool state_allowed_for(VehicleClass c, VehicleState s);
bool is_idle_state(VehicleState s);
bool is_charge_state(VehicleState s);
bool is_routine_state(VehicleState s);

/// The class's plant task state (PotRefill / AnodeReplace / CollectAluminium).
VehicleState routine_state_for(VehicleClass c);

struct IllegalTransition : std::logic_error {
  IllegalTransition(VehicleClass c, VehicleState s, Symbol sym);
};

/// Deterministic transition function. `choice` is consulted only for Dtm.
/// Throws IllegalTransition for inadmissible (class, state, symbol) triples;
/// that always indicates a dispatcher or engine bug.
VehicleState next_state(VehicleClass cls, VehicleState current, Symbol symbol,
                        DtmChoice choice = DtmChoice::Surveillance);

/// next_state without the throw; nullopt marks an inadmissible triple.
std::optional<VehicleState> try_next_state(VehicleClass cls, VehicleState current,
                                           Symbol symbol,
                                           DtmChoice choice = DtmChoice::Surveillance);

/// Snapshot of everything symbol emission looks at.
struct SymbolInputs {
  VehicleClass cls = VehicleClass::Ffv;
  VehicleState state = VehicleState::LookForEvents;
  double soc_fraction = 1.0;
  double low_soc_threshold = 0.20;
  bool ffv_tank_empty = false;   // below one dispense load
  bool pending_plant_task = false;
  bool pending_garbage_task = false;
  bool task_completed = false;
};

/// All symbols true of the snapshot, in fixed priority order
/// Bc > Pm/G > Vel > Dtm > Tc. The caller consumes the first symbol that is
/// admissible for the vehicle's current state; at most one per decision.
std::vector<Symbol> emit_symbols(const SymbolInputs& in);

}  // namespace agv
