#ifndef METRO_HYPERGRAPH_HPP
#define METRO_HYPERGRAPH_HPP

#include <vector>

#include "metro/graph.hpp"
#include "metro/matrix.hpp"

namespace metro {

// Vertex/hyperedge incidence structure with the derived operators
//
//   M         incidence, M(v, e) = 1 iff v is in hyperedge e
//   d(v)      vertex degree, row sums of M
//   d(e)      edge degree, column sums of M
//   Theta     Dv^{-1/2} M De^{-1} M^T Dv^{-1/2}
//   Delta     I - Theta (normalized hypergraph Laplacian)
//
// Every vertex must belong to at least one hyperedge, otherwise its degree
// entry would vanish and Theta would be undefined.
class Hypergraph {
 public:
  Hypergraph(std::size_t vertex_count, std::vector<std::vector<int>> hyperedges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }
  const Matrix& incidence() const { return incidence_; }
  const std::vector<double>& vertex_degrees() const { return vertex_degrees_; }
  const std::vector<double>& edge_degrees() const { return edge_degrees_; }
  const Matrix& theta() const { return theta_; }
  Matrix laplacian() const;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<int>> hyperedges_;
  Matrix incidence_;
  std::vector<double> vertex_degrees_, edge_degrees_;
  Matrix theta_;
};

// Hypergraph view of a metro network: one 2-vertex hyperedge per link, plus
// one hyperedge per named line containing every station that line serves.
// Hyperedges with identical vertex sets are deduplicated (first occurrence
// kept). Throws ValidationError if some station lies on no link.
Hypergraph build_hypergraph(const MetroGraph& g);

enum class PropagationKind { Identity, Adjacency, Hypergraph };

// N x N propagation operator used by the forecasting models: the identity,
// the raw adjacency matrix, or the hypergraph matrix Theta.
struct PropagationOperator {
  PropagationKind kind = PropagationKind::Identity;
  Matrix matrix;
};

PropagationOperator make_propagation(const MetroGraph& g, PropagationKind kind);

}  // namespace metro

#endif
