#ifndef METRO_GRAPH_HPP
#define METRO_GRAPH_HPP

#include <set>
#include <string>
#include <vector>

#include "metro/matrix.hpp"

namespace metro {

struct Station {
  std::string id;
  std::string name;
  double lat = 0.0;   // degrees, WGS84
  double lon = 0.0;   // degrees, WGS84
  int zone = 1;
};

// Undirected connection between two stations, carrying the set of line
// names that run over it. Endpoints are normalized so a < b after build.
struct Link {
  std::string a;
  std::string b;
  std::set<std::string> lines;
};

// Immutable station/link structure with the derived adjacency, degree and
// Laplacian matrices. Vertex indices follow station input order. Parallel
// lines between the same pair collapse to a single binary adjacency entry;
// line multiplicity is kept on Link::lines for the hypergraph construction.
class MetroGraph {
 public:
  std::size_t size() const { return stations_.size(); }
  const std::vector<Station>& stations() const { return stations_; }
  const Station& station(std::size_t idx) const { return stations_[idx]; }
  const std::vector<Link>& links() const { return links_; }

  int index_of(const std::string& id) const;  // throws ValidationError if unknown
  bool has_link(int i, int j) const { return adjacency_(i, j) != 0.0; }

  // Neighbor lists sorted by vertex index.
  const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }
  // Link endpoints as index pairs (i < j), in link order.
  const std::vector<std::pair<int, int>>& link_indices() const { return link_indices_; }

  const Matrix& adjacency() const { return adjacency_; }
  const Matrix& degree() const { return degree_; }
  const Matrix& laplacian() const { return laplacian_; }

  friend MetroGraph build_graph(std::vector<Station> stations, std::vector<Link> links);

 private:
  MetroGraph() = default;

  std::vector<Station> stations_;
  std::vector<Link> links_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::pair<int, int>> link_indices_;
  Matrix adjacency_, degree_, laplacian_;
};

// Validates and assembles a graph. Throws ValidationError on duplicate
// station ids, out-of-range coordinates, dangling link endpoints, self
// loops or empty line sets. Links naming the same unordered pair are merged
// (their line sets are unioned).
MetroGraph build_graph(std::vector<Station> stations, std::vector<Link> links);

bool is_connected(const MetroGraph& g);

// Great-circle distance in kilometres, Earth radius 6371.0 km.
double haversine_km(const Station& a, const Station& b);

}  // namespace metro

#endif
