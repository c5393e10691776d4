#include "metro/exports.hpp"

#include <json.hpp>

#include "metro/report.hpp"

namespace metro {

namespace {

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string dot_impl(const MetroGraph& g, const AugmentationPlan* plan) {
  std::string out = "graph metro {\n";
  for (const Station& s : g.stations())
    out += "  " + quote_dot(s.id) + " [label=" + quote_dot(s.id) + "];\n";
  for (const Link& link : g.links())
    out += "  " + quote_dot(link.a) + " -- " + quote_dot(link.b) + ";\n";
  if (plan) {
    for (const auto& e : plan->added)
      out += "  " + quote_dot(e.a) + " -- " + quote_dot(e.b) + " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json point_feature(const Station& s) {
  return {{"type", "Feature"},
          {"geometry", {{"type", "Point"}, {"coordinates", {s.lon, s.lat}}}},
          {"properties", {{"id", s.id}, {"name", s.name}, {"zone", s.zone}}}};
}

nlohmann::json line_feature(const MetroGraph& g, const std::string& a, const std::string& b,
                            bool added, double distance_km) {
  const Station& sa = g.station(g.index_of(a));
  const Station& sb = g.station(g.index_of(b));
  nlohmann::json props = {{"from", a}, {"to", b}};
  if (added) {
    props["added"] = true;
    props["distance_km"] = distance_km;
  }
  return {{"type", "Feature"},
          {"geometry",
           {{"type", "LineString"},
            {"coordinates", {{sa.lon, sa.lat}, {sb.lon, sb.lat}}}}},
          {"properties", props}};
}

std::string geojson_impl(const MetroGraph& g, const AugmentationPlan* plan) {
  nlohmann::json features = nlohmann::json::array();
  for (const Station& s : g.stations()) features.push_back(point_feature(s));
  for (const Link& link : g.links())
    features.push_back(line_feature(g, link.a, link.b, false, 0.0));
  if (plan) {
    for (const auto& e : plan->added)
      features.push_back(line_feature(g, e.a, e.b, true, e.distance_km));
  }
  return canonical_dump({{"type", "FeatureCollection"}, {"features", features}});
}

}  // namespace

std::string to_dot(const MetroGraph& g) { return dot_impl(g, nullptr); }
std::string to_dot(const MetroGraph& g, const AugmentationPlan& plan) {
  return dot_impl(g, &plan);
}

std::string to_geojson(const MetroGraph& g) { return geojson_impl(g, nullptr); }
std::string to_geojson(const MetroGraph& g, const AugmentationPlan& plan) {
  return geojson_impl(g, &plan);
}

}  // namespace metro
