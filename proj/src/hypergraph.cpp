#include "metro/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "metro/errors.hpp"

namespace metro {

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<std::vector<int>> hyperedges)
    : vertex_count_(vertex_count), hyperedges_(std::move(hyperedges)) {
  const std::size_t m = hyperedges_.size();
  for (auto& edge : hyperedges_) {
    if (edge.empty()) throw ValidationError("empty hyperedge");
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    for (int v : edge)
      if (v < 0 || static_cast<std::size_t>(v) >= vertex_count_)
        throw ValidationError("hyperedge vertex out of range");
  }

  incidence_ = Matrix(vertex_count_, m);
  for (std::size_t e = 0; e < m; ++e)
    for (int v : hyperedges_[e]) incidence_(v, e) = 1.0;

  vertex_degrees_.assign(vertex_count_, 0.0);
  edge_degrees_.assign(m, 0.0);
  for (std::size_t v = 0; v < vertex_count_; ++v)
    for (std::size_t e = 0; e < m; ++e) {
      vertex_degrees_[v] += incidence_(v, e);
      edge_degrees_[e] += incidence_(v, e);
    }
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (vertex_degrees_[v] == 0.0)
      throw ValidationError("vertex " + std::to_string(v) +
                            " belongs to no hyperedge; Theta is undefined");

  // Theta = Dv^{-1/2} M De^{-1} M^T Dv^{-1/2}
  Matrix scaled = incidence_;  // Dv^{-1/2} M De^{-1}
  for (std::size_t v = 0; v < vertex_count_; ++v)
    for (std::size_t e = 0; e < m; ++e)
      scaled(v, e) /= std::sqrt(vertex_degrees_[v]) * edge_degrees_[e];
  Matrix right = incidence_.transposed();  // M^T Dv^{-1/2}
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t v = 0; v < vertex_count_; ++v)
      right(e, v) /= std::sqrt(vertex_degrees_[v]);
  theta_ = matmul(scaled, right);
}

Matrix Hypergraph::laplacian() const {
  Matrix delta = Matrix::identity(vertex_count_);
  delta -= theta_;
  return delta;
}

Hypergraph build_hypergraph(const MetroGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t v = 0; v < n; ++v)
    if (g.neighbors()[v].empty())
      throw ValidationError("station '" + g.station(v).id + "' is isolated");

  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  auto push_unique = [&](std::vector<int> edge) {
    std::sort(edge.begin(), edge.end());
    if (seen.insert(edge).second) edges.push_back(std::move(edge));
  };

  for (auto [i, j] : g.link_indices()) push_unique({i, j});

  // Stations served by each named line, line names in sorted order.
  std::map<std::string, std::set<int>> line_members;
  for (std::size_t l = 0; l < g.links().size(); ++l) {
    auto [i, j] = g.link_indices()[l];
    for (const std::string& line : g.links()[l].lines) {
      line_members[line].insert(i);
      line_members[line].insert(j);
    }
  }
  for (const auto& [line, members] : line_members)
    push_unique(std::vector<int>(members.begin(), members.end()));

  return Hypergraph(n, std::move(edges));
}

PropagationOperator make_propagation(const MetroGraph& g, PropagationKind kind) {
  PropagationOperator op;
  op.kind = kind;
  switch (kind) {
    case PropagationKind::Identity:
      op.matrix = Matrix::identity(g.size());
      break;
    case PropagationKind::Adjacency:
      op.matrix = g.adjacency();
      break;
    case PropagationKind::Hypergraph:
      op.matrix = build_hypergraph(g).theta();
      break;
  }
  return op;
}

}  // namespace metro
