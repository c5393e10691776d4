#ifndef METRO_ROBUSTNESS_HPP
#define METRO_ROBUSTNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "metro/graph.hpp"

namespace metro {

// Proposed set of new links. Added pairs are disjoint from the existing
// link set, stored with a < b and sorted lexicographically.
struct AugmentationPlan {
  struct AddedEdge {
    std::string a;
    std::string b;
    double distance_km = 0.0;
  };
  std::vector<AddedEdge> added;
  int resulting_connectivity = 0;
  bool constrained = false;
  std::optional<double> threshold_km;
};

// Global minimum edge cut of the unweighted graph (Stoer-Wagner), i.e. the
// largest k for which the graph is k-edge connected. Returns 0 for
// disconnected input. Throws ValidationError for fewer than two stations.
int edge_connectivity(const MetroGraph& g);

// Oracle: smallest edge subset whose removal disconnects the graph, found
// by exhaustive subset search in increasing size. Requires at most 20 links.
int brute_force_connectivity(const MetroGraph& g);

// Minimum k-edge augmentation. For k = 2 the unconstrained plan is exactly
// minimal: the 2-edge-connected components are contracted to the bridge
// tree and its leaves are paired, ceil(leaves / 2) new links in total. With
// a distance threshold only pairs closer than max_dist_km are admissible;
// a greedy leaf-pairing runs, with an exhaustive fallback on small graphs.
// For k > 2 a greedy heuristic adds admissible pairs across the current
// minimum cut (validated, not claimed minimal). Throws InfeasibleError,
// carrying the best achievable connectivity, when no admissible plan
// reaches k.
AugmentationPlan augment(const MetroGraph& g, int k,
                         std::optional<double> max_dist_km = std::nullopt);

// Oracle: exhaustive search over non-link subsets in increasing cardinality;
// the first feasible subset in lexicographic pair order wins. Requires
// N <= 10.
AugmentationPlan brute_force_augment(const MetroGraph& g, int k,
                                     std::optional<double> max_dist_km = std::nullopt);

}  // namespace metro

#endif
