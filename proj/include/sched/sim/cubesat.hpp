#pragma once

#include <optional>

namespace sched::sim {

enum class SatStatus { Operational, Failed, Dormant };

struct CubeSatState {
  int id = -1;
  double energy_j = 2000.0;
  double e_max_j = 2000.0;
  double storage_free_mb = 512.0;
  double storage_cap_mb = 512.0;
  double compute_load = 0.0;   // xi(t)
  double xi_max = 1.0;
  double temperature_c = 15.0;
  double orientation_rad = 0.0;
  SatStatus status = SatStatus::Operational;
  std::optional<int> current_task;
  double recovery_at_s = 0.0;  // valid while status == Failed

  double compute_free() const {
    const double f = xi_max - compute_load;
    return f > 0.0 ? f : 0.0;
  }
  bool idle() const { return !current_task.has_value(); }
};

}  // namespace sched::sim
