#ifndef METRO_CENTRALITY_HPP
#define METRO_CENTRALITY_HPP

#include <string>
#include <vector>

#include "metro/graph.hpp"

namespace metro {

struct CentralityReport {
  std::vector<double> values;        // indexed by station, >= 0
  std::vector<std::string> ranking;  // ids, descending value, ties by id
};

// Betweenness centrality over unweighted shortest paths:
//
//   B(n) = sum over unordered pairs {k, m}, k != m != n, of
//          sigma(k, m | n) / sigma(k, m)
//
// Endpoints are excluded and no normalization constant is applied. Counting
// ordered pairs instead would scale every value by 2 and leave the ranking
// unchanged. Pairs in different components contribute nothing. Computed with
// Brandes single-source accumulation.
CentralityReport betweenness(const MetroGraph& g);

// Verification oracle: enumerates every shortest path explicitly and tallies
// interior vertices. Requires N <= 12 (throws ValidationError above that).
CentralityReport brute_force_betweenness(const MetroGraph& g);

}  // namespace metro

#endif
