#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sched/sim/energy_model.hpp"
#include "sched/sim/orbit.hpp"
#include "sched/sim/solar.hpp"
#include "sched/sim/task.hpp"

namespace sched::sim {

struct SatSpec {
  int id = 0;
  double raan_deg = 0.0;
  double phase_frac = 0.0;
  double e_max_j = 2000.0;
  double storage_cap_mb = 512.0;
  double xi_max = 1.0;
};

struct FailureModel {
  double per_orbit_failure_prob = 0.02;
  double recovery_orbits = 1.0;
};

struct PowerParams {
  double idle_w = 0.4;       // bus draw while operational
  double dormant_w = 0.05;   // draw while dormant or failed
  double dormancy_frac = 0.05;  // of e_max; below it the sat goes dormant
};

struct Scenario {
  int n_cubesats = 3;
  double altitude_km = 550.0;
  double inclination_deg = 51.6;
  double sim_horizon_s = 0.0;  // 10 orbits unless overridden
  std::uint64_t rng_seed = 0;
  std::vector<SatSpec> sats;
  SolarModel solar;
  PowerParams power;
  EnergyCostModel energy_cost;
  FailureModel failure;
  double slew_rate_rad_s = kPi / 180.0;  // 1 deg/s
  std::vector<Task> tasks;

  OrbitConfig orbit_for(int sat_index) const {
    OrbitConfig o = OrbitConfig::at_altitude(altitude_km);
    o.inclination_rad = inclination_deg * kPi / 180.0;
    o.raan_rad = sats[sat_index].raan_deg * kPi / 180.0;
    o.phase_frac = sats[sat_index].phase_frac;
    return o;
  }
  double period_s() const { return orbital_period_s(altitude_km); }
  double e_max_ref_j() const {
    double m = 0.0;
    for (const auto& sat : sats) m = std::max(m, sat.e_max_j);
    return m > 0.0 ? m : 2000.0;
  }
};

struct ScenarioOptions {
  double altitude_km = 550.0;
  double inclination_deg = 51.6;
  double horizon_orbits = 10.0;
  double e_max_j = 2000.0;
  double fail_prob = 0.02;
};

// Random targets and task attributes; every task's observation window is an
// actual visibility pass of one of the satellites, so the scenario is
// feasible by construction. Deterministic per seed.
Scenario generate_scenario(int n_cubesats, int n_tasks, std::uint64_t seed,
                           const ScenarioOptions& opt = {});

std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& json_text);
void save_scenario(const std::string& path, const Scenario& s);
Scenario load_scenario(const std::string& path);

}  // namespace sched::sim
