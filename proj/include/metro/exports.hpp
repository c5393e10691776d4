#ifndef METRO_EXPORTS_HPP
#define METRO_EXPORTS_HPP

#include <string>

#include "metro/graph.hpp"
#include "metro/robustness.hpp"

namespace metro {

// DOT rendering: one node per station labelled with its id, one undirected
// edge per link. Added edges from a plan are drawn dashed.
std::string to_dot(const MetroGraph& g);
std::string to_dot(const MetroGraph& g, const AugmentationPlan& plan);

// GeoJSON rendering: a Point feature per station (lon/lat order) and a
// LineString per link. Added edges carry an "added": true property.
std::string to_geojson(const MetroGraph& g);
std::string to_geojson(const MetroGraph& g, const AugmentationPlan& plan);

}  // namespace metro

#endif
