#include "metro/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metro/errors.hpp"

namespace metro {

NetFlowSignal net_flow(const MetroGraph& g, const FlowTable& flows, FlowDefinition definition,
                       Window window) {
  const std::size_t n = g.size();
  if (flows.rows.size() != n)
    throw ValidationError("flow table does not cover every station");

  NetFlowSignal signal;
  signal.definition = definition;
  signal.window = window;
  signal.q.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const StationFlows& f = flows.rows[i];
    double entries = (window == Window::Am) ? f.entries_am : f.entries_pm;
    double exits = (window == Window::Am) ? f.exits_am : f.exits_pm;
    if (entries < 0.0 || exits < 0.0)
      throw ValidationError("negative passenger count at station '" + g.station(i).id + "'");
    if (definition == FlowDefinition::Log) {
      if (entries < 1.0 || exits < 1.0)
        throw ValidationError("log net flow undefined at station '" + g.station(i).id +
                              "': counts below 1 in the selected window");
      signal.q[i] = std::log(exits) - std::log(entries);
    } else {
      signal.q[i] = exits - entries;
    }
  }
  return signal;
}

std::vector<double> forward_flow(const MetroGraph& g, const std::vector<double>& phi, double k) {
  if (phi.size() != g.size())
    throw std::invalid_argument("forward_flow: signal length does not match station count");
  if (!(k > 0.0)) throw std::invalid_argument("forward_flow: diffusivity must be positive");
  std::vector<double> q = matvec(g.laplacian(), phi);
  for (double& v : q) v *= -k;
  return q;
}

PopulationEstimate estimate_population(const MetroGraph& g, const NetFlowSignal& signal,
                                       double k) {
  const std::size_t n = g.size();
  if (signal.q.size() != n)
    throw std::invalid_argument("estimate_population: signal length does not match graph");
  if (!(k > 0.0))
    throw std::invalid_argument("estimate_population: diffusivity must be positive");
  if (!is_connected(g))
    throw ValidationError("population estimation requires a connected graph");

  double mean = 0.0;
  for (double v : signal.q) mean += v;
  mean /= static_cast<double>(n);

  std::vector<double> projected(n);
  for (std::size_t i = 0; i < n; ++i) projected[i] = signal.q[i] - mean;

  std::vector<double> phi = matvec(pseudo_inverse(g.laplacian()), projected);
  for (double& v : phi) v *= -1.0 / k;

  double lowest = *std::min_element(phi.begin(), phi.end());
  for (double& v : phi) v -= lowest;

  PopulationEstimate estimate;
  estimate.phi_hat = std::move(phi);
  estimate.diffusivity = k;
  estimate.projected_offset = mean;
  return estimate;
}

}  // namespace metro
