#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "sched/nn/mlp.hpp"

namespace sched::nn {

// Plain-text network snapshot:
//   MLPV1 <n_layers> <hidden_act> <output_act>
//   <dim_0> ... <dim_n>
//   then per layer: one row-major weight line, one bias line.
// Values are printed with %.17g so a save/load round trip is bit-exact.
void save_mlp(std::ostream& os, const MlpNet& net);
MlpNet load_mlp(std::istream& is);

void save_mlp_file(const std::string& path, const MlpNet& net);
MlpNet load_mlp_file(const std::string& path);

std::string format_g17(double v);

}  // namespace sched::nn
