#pragma once

#include <map>
#include <optional>
#include <vector>

namespace sched::sim {

enum class TaskStatus { Unassigned, InProgress, Completed, Failed };

struct Task {
  int id = -1;
  int priority = 1;          // ground-station priority, 1..5
  double compute_req = 0.0;  // compute units
  double memory_req = 0.0;   // MB
  double duration_s = 0.0;   // required execution time
  double window_start_s = 0.0;
  double window_end_s = 0.0;
  double deadline_s = 0.0;
  double target_lat_deg = 0.0;
  double target_lon_deg = 0.0;
  double arrival_s = 0.0;

  TaskStatus status = TaskStatus::Unassigned;
  int n_realloc = 0;         // policy-driven reallocations this task has seen
};

enum class ClaimResult { Accepted, AlreadyClaimed, UnknownTask, TerminalStatus, SatUnavailable };

// Shared task queue with the exclusivity guarantee: one claimant per task,
// enforced here rather than trusted to callers.
class TaskStore {
 public:
  void add(Task t) { tasks_[t.id] = t; }

  bool contains(int id) const { return tasks_.count(id) > 0; }
  const Task& get(int id) const { return tasks_.at(id); }
  Task& get_mut(int id) { return tasks_.at(id); }

  std::optional<int> claimant_of(int task_id) const {
    auto it = claims_.find(task_id);
    if (it == claims_.end()) return std::nullopt;
    return it->second;
  }

  ClaimResult claim(int task_id, int sat_id) {
    auto it = tasks_.find(task_id);
    if (it == tasks_.end()) return ClaimResult::UnknownTask;
    Task& t = it->second;
    if (t.status == TaskStatus::InProgress) return ClaimResult::AlreadyClaimed;
    if (t.status != TaskStatus::Unassigned) return ClaimResult::TerminalStatus;
    t.status = TaskStatus::InProgress;
    claims_[task_id] = sat_id;
    return ClaimResult::Accepted;
  }

  // in_progress -> unassigned (reallocation or dormancy requeue)
  void release(int task_id, bool count_realloc) {
    Task& t = tasks_.at(task_id);
    t.status = TaskStatus::Unassigned;
    if (count_realloc) ++t.n_realloc;
    claims_.erase(task_id);
  }

  void complete(int task_id) {
    tasks_.at(task_id).status = TaskStatus::Completed;
    claims_.erase(task_id);
  }

  void fail(int task_id) {
    tasks_.at(task_id).status = TaskStatus::Failed;
    claims_.erase(task_id);
  }

  // Unassigned tasks that can still make progress (window not yet closed).
  std::vector<int> viable_unassigned(double now) const {
    std::vector<int> out;
    for (const auto& [id, t] : tasks_)
      if (t.status == TaskStatus::Unassigned && t.window_end_s > now) out.push_back(id);
    return out;
  }

  const std::map<int, Task>& all() const { return tasks_; }
  const std::map<int, int>& claims() const { return claims_; }
  std::size_t size() const { return tasks_.size(); }

 private:
  std::map<int, Task> tasks_;
  std::map<int, int> claims_;  // task id -> sat id
};

}  // namespace sched::sim
