#ifndef METRO_DATASET_HPP
#define METRO_DATASET_HPP

#include <map>
#include <optional>
#include <string>

#include "metro/diffusion.hpp"
#include "metro/graph.hpp"

namespace metro {

struct DatasetPaths {
  std::string stations;
  std::string edges;
  std::optional<std::string> flows;
};

struct Dataset {
  MetroGraph graph;
  std::optional<FlowTable> flows;
  // role (stations/edges/flows) -> {path, content digest}
  std::map<std::string, std::pair<std::string, std::string>> inputs;
};

// Loads and validates the CSV trio:
//
//   stations.csv  id,name,lat,lon,zone
//   edges.csv     from_id,to_id,line          (one row per pair per line)
//   flows.csv     station_id,entries_am,exits_am,entries_pm,exits_pm
//
// Vertex order follows stations.csv row order. Headers must match exactly.
// Errors carry file and line diagnostics; rows are rejected, never repaired.
Dataset load_dataset(const DatasetPaths& paths);

}  // namespace metro

#endif
