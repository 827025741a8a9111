#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sched/harness/run_config.hpp"

namespace sched::harness {

// Head-to-head evaluation of several policy presets over a grid of problem
// sizes. Scenarios and episode seeds are shared across policies within a
// (cell, seed) pair, so differences come from the policies alone. Learned
// presets are loaded from checkpoints named by the config's "checkpoints"
// patterns ({seed}, {n}, {m} are substituted).
struct CompareOptions {
  RunConfig base;
  std::vector<PolicyKind> policies;
  std::vector<std::uint64_t> seeds;
  std::vector<std::pair<int, int>> grid;  // (n_cubesats, n_tasks)
  int episodes = 50;
  std::string out_dir = "runs/compare";
};

struct CompareResult {
  std::string out_dir;
  int cells = 0;
  int raw_rows = 0;
};

// "1..5", "1,3,9", or "7"
std::vector<std::uint64_t> parse_seed_list(const std::string& text);
// "3x30" or "3x30,6x60"
std::vector<std::pair<int, int>> parse_grid(const std::string& text);

CompareResult run_compare(const CompareOptions& opt);

}  // namespace sched::harness
