#ifndef METRO_DIFFUSION_HPP
#define METRO_DIFFUSION_HPP

#include <string>
#include <vector>

#include "metro/graph.hpp"

namespace metro {

enum class FlowDefinition { Log, Linear };
enum class Window { Am, Pm };

struct StationFlows {
  double entries_am = 0.0;
  double exits_am = 0.0;
  double entries_pm = 0.0;
  double exits_pm = 0.0;
};

// Per-station passenger counts, one record per station in vertex order.
struct FlowTable {
  std::vector<StationFlows> rows;
};

// Per-station net out-flow signal.
//   log:    q_i = ln(exits_i) - ln(entries_i)
//   linear: q_i = exits_i - entries_i
struct NetFlowSignal {
  std::vector<double> q;
  FlowDefinition definition = FlowDefinition::Log;
  Window window = Window::Am;
};

struct PopulationEstimate {
  std::vector<double> phi_hat;    // relative population, min entry exactly 0
  double diffusivity = 1.0;
  double projected_offset = 0.0;  // mean removed from q to land in the Laplacian range
};

// Builds the net out-flow signal for one rush-hour window. The log
// definition requires every used count to be >= 1; a smaller count raises
// ValidationError naming the offending station.
NetFlowSignal net_flow(const MetroGraph& g, const FlowTable& flows, FlowDefinition definition,
                       Window window);

// Steady-state flow from a population signal: q = -k L phi. Also equals the
// per-station form q_i = -k * sum_j A_ij (phi_i - phi_j), so the output sums
// to zero for any input.
std::vector<double> forward_flow(const MetroGraph& g, const std::vector<double>& phi, double k);

// Inverts the flow model: phi_hat = -(1/k) L^+ q. The input is first
// projected onto the zero-sum subspace (its mean is recorded as
// projected_offset), and the result is shifted so the smallest entry is
// exactly 0. Populations are therefore relative, not absolute. Requires a
// connected graph.
PopulationEstimate estimate_population(const MetroGraph& g, const NetFlowSignal& signal,
                                       double k);

}  // namespace metro

#endif
