#include "agvsim/fsm.hpp"

namespace agv {

const char* to_string(VehicleClass c) {
  switch (c) {
    case VehicleClass::Ffv: return "ffv";
    case VehicleClass::Aptv: return "aptv";
    case VehicleClass::Mtv: return "mtv";
  }
  return "ffv";
}

const char* to_string(VehicleState s) {
  switch (s) {
    case VehicleState::LookForEvents: return "look_for_events";
    case VehicleState::Surveillance: return "surveillance";
    case VehicleState::IdleCharging: return "idle_charging";
    case VehicleState::Alf3Refill: return "alf3_refill";
    case VehicleState::ChargeBrain: return "charge_brain";
    case VehicleState::ChargeAgv: return "charge_agv";
    case VehicleState::PotRefill: return "pot_refill";
    case VehicleState::AnodeReplace: return "anode_replace";
    case VehicleState::GarbageTask: return "garbage_task";
    case VehicleState::CollectAluminium: return "collect_aluminium";
  }
  return "look_for_events";
}

const char* to_string(Symbol s) {
  switch (s) {
    case Symbol::Pm: return "pm";
    case Symbol::Dtm: return "dtm";
    case Symbol::Bc: return "bc";
    case Symbol::Vel: return "vel";
    case Symbol::Tc: return "tc";
    case Symbol::G: return "g";
  }
  return "pm";
}

std::optional<VehicleClass> vehicle_class_from_string(std::string_view s) {
  if (s == "ffv") return VehicleClass::Ffv;
  if (s == "aptv") return VehicleClass::Aptv;
  if (s == "mtv") return VehicleClass::Mtv;
  return std::nullopt;
}

bool is_idle_state(VehicleState s) {
  return s == VehicleState::LookForEvents || s == VehicleState::Surveillance ||
         s == VehicleState::IdleCharging || s == VehicleState::Alf3Refill;
}

bool is_charge_state(VehicleState s) {
  return s == VehicleState::ChargeBrain || s == VehicleState::ChargeAgv;
}

bool is_routine_state(VehicleState s) {
  return s == VehicleState::PotRefill || s == VehicleState::AnodeReplace ||
         s == VehicleState::GarbageTask || s == VehicleState::CollectAluminium;
}

VehicleState routine_state_for(VehicleClass c) {
  switch (c) {
    case VehicleClass::Ffv: return VehicleState::PotRefill;
    case VehicleClass::Aptv: return VehicleState::AnodeReplace;
    case VehicleClass::Mtv: return VehicleState::CollectAluminium;
  }
  return VehicleState::PotRefill;
}

bool state_allowed_for(VehicleClass c, VehicleState s) {
  switch (s) {
    case VehicleState::Alf3Refill:
    case VehicleState::PotRefill:
      return c == VehicleClass::Ffv;
    case VehicleState::AnodeReplace:
    case VehicleState::GarbageTask:
      return c == VehicleClass::Aptv;
    case VehicleState::CollectAluminium:
      return c == VehicleClass::Mtv;
    default:
      return true;
  }
}

IllegalTransition::IllegalTransition(VehicleClass c, VehicleState s, Symbol sym)
    : std::logic_error(std::string("illegal transition: (") + to_string(c) + ", " +
                       to_string(s) + ", " + to_string(sym) + ")") {}

std::optional<VehicleState> try_next_state(VehicleClass cls, VehicleState current,
                                           Symbol symbol, DtmChoice choice) {
  using S = VehicleState;
  if (!state_allowed_for(cls, current)) return std::nullopt;

  switch (symbol) {
    case Symbol::Bc:
      return current == S::LookForEvents ? std::optional<S>(S::ChargeBrain) : std::nullopt;

    case Symbol::Tc:
      // Every task completion returns to the hub; the charge pair chains.
      if (current == S::ChargeBrain) return S::ChargeAgv;
      if (current == S::ChargeAgv) return S::LookForEvents;
      if (is_routine_state(current) || current == S::Surveillance ||
          current == S::IdleCharging || current == S::Alf3Refill) {
        return S::LookForEvents;
      }
      return std::nullopt;

    case Symbol::Pm:
      // Plant tasks are taken from the hub and preempt any idle sub-task.
      if (current == S::LookForEvents || current == S::Surveillance ||
          current == S::IdleCharging || current == S::Alf3Refill) {
        return routine_state_for(cls);
      }
      return std::nullopt;

    case Symbol::G:
      if (cls != VehicleClass::Aptv) return std::nullopt;
      if (current == S::LookForEvents || current == S::Surveillance ||
          current == S::IdleCharging) {
        return S::GarbageTask;
      }
      return std::nullopt;

    case Symbol::Vel:
      if (cls == VehicleClass::Ffv && current == S::LookForEvents) return S::Alf3Refill;
      return std::nullopt;

    case Symbol::Dtm:
      if (current != S::LookForEvents) return std::nullopt;
      switch (choice) {
        case DtmChoice::Surveillance: return S::Surveillance;
        case DtmChoice::Charge: return S::IdleCharging;
        case DtmChoice::Refill:
          return cls == VehicleClass::Ffv ? std::optional<S>(S::Alf3Refill) : std::nullopt;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

VehicleState next_state(VehicleClass cls, VehicleState current, Symbol symbol,
                        DtmChoice choice) {
  auto next = try_next_state(cls, current, symbol, choice);
  if (!next) throw IllegalTransition(cls, current, symbol);
  return *next;
}

std::vector<Symbol> emit_symbols(const SymbolInputs& in) {
  std::vector<Symbol> out;
  if (in.soc_fraction < in.low_soc_threshold) out.push_back(Symbol::Bc);
  if (in.pending_plant_task) out.push_back(Symbol::Pm);
  if (in.pending_garbage_task) out.push_back(Symbol::G);
  if (in.cls == VehicleClass::Ffv && in.ffv_tank_empty) out.push_back(Symbol::Vel);
  if (in.state == VehicleState::LookForEvents) out.push_back(Symbol::Dtm);
  if (in.task_completed) out.push_back(Symbol::Tc);
  return out;
}

}  // namespace agv
