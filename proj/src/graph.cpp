#include "metro/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "metro/errors.hpp"

namespace metro {

int MetroGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < stations_.size(); ++i)
    if (stations_[i].id == id) return static_cast<int>(i);
  throw ValidationError("unknown station id '" + id + "'");
}

MetroGraph build_graph(std::vector<Station> stations, std::vector<Link> links) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < stations.size(); ++i) {
    const Station& s = stations[i];
    if (s.id.empty()) throw ValidationError("station with empty id");
    if (index.count(s.id)) throw ValidationError("duplicate station id '" + s.id + "'");
    if (s.lat < -90.0 || s.lat > 90.0)
      throw ValidationError("station '" + s.id + "': latitude out of range");
    if (s.lon < -180.0 || s.lon > 180.0)
      throw ValidationError("station '" + s.id + "': longitude out of range");
    index[s.id] = static_cast<int>(i);
  }

  // Merge links per unordered pair, preserving first-occurrence order.
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  std::vector<Link> merged;
  for (Link& link : links) {
    if (!index.count(link.a))
      throw ValidationError("link endpoint '" + link.a + "' is not a known station");
    if (!index.count(link.b))
      throw ValidationError("link endpoint '" + link.b + "' is not a known station");
    if (link.a == link.b)
      throw ValidationError("self loop at station '" + link.a + "'");
    if (link.lines.empty())
      throw ValidationError("link " + link.a + "-" + link.b + " has no lines");
    if (link.b < link.a) std::swap(link.a, link.b);
    auto key = std::make_pair(link.a, link.b);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen[key] = merged.size();
      merged.push_back(std::move(link));
    } else {
      merged[it->second].lines.insert(link.lines.begin(), link.lines.end());
    }
  }

  const std::size_t n = stations.size();
  MetroGraph g;
  g.stations_ = std::move(stations);
  g.links_ = std::move(merged);
  g.neighbors_.assign(n, {});
  g.adjacency_ = Matrix(n, n);
  for (const Link& link : g.links_) {
    int i = index[link.a], j = index[link.b];
    g.link_indices_.emplace_back(std::min(i, j), std::max(i, j));
    g.adjacency_(i, j) = 1.0;
    g.adjacency_(j, i) = 1.0;
    g.neighbors_[i].push_back(j);
    g.neighbors_[j].push_back(i);
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());

  g.degree_ = Matrix(n, n);
  g.laplacian_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double d = static_cast<double>(g.neighbors_[i].size());
    g.degree_(i, i) = d;
    for (std::size_t j = 0; j < n; ++j)
      g.laplacian_(i, j) = (i == j ? d : 0.0) - g.adjacency_(i, j);
  }
  return g;
}

bool is_connected(const MetroGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors()[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

double haversine_km(const Station& a, const Station& b) {
  constexpr double kEarthRadiusKm = 6371.0;
  constexpr double kDegToRad = M_PI / 180.0;
  double lat1 = a.lat * kDegToRad, lat2 = b.lat * kDegToRad;
  double dlat = (b.lat - a.lat) * kDegToRad;
  double dlon = (b.lon - a.lon) * kDegToRad;
  double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
             std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace metro
