#include "metro/centrality.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "metro/errors.hpp"

namespace metro {

namespace {

CentralityReport make_report(const MetroGraph& g, std::vector<double> values) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (values[i] != values[j]) return values[i] > values[j];
    return g.station(i).id < g.station(j).id;
  });
  CentralityReport report;
  report.values = std::move(values);
  report.ranking.reserve(n);
  for (std::size_t idx : order) report.ranking.push_back(g.station(idx).id);
  return report;
}

}  // namespace

CentralityReport betweenness(const MetroGraph& g) {
  const int n = static_cast<int>(g.size());
  const auto& adj = g.neighbors();
  std::vector<double> bc(n, 0.0);

  for (int s = 0; s < n; ++s) {
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> dist(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<int>> preds(n);

    std::queue<int> frontier;
    dist[s] = 0;
    sigma[s] = 1.0;
    frontier.push(s);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }

    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }

  // Brandes sums over ordered pairs; halve for the unordered convention.
  for (double& v : bc) v /= 2.0;
  return make_report(g, std::move(bc));
}

CentralityReport brute_force_betweenness(const MetroGraph& g) {
  const int n = static_cast<int>(g.size());
  if (n > 12) throw ValidationError("brute_force_betweenness: graph too large (N > 12)");
  const auto& adj = g.neighbors();
  std::vector<double> bc(n, 0.0);

  for (int k = 0; k < n; ++k) {
    std::vector<int> dist(n, -1);
    std::queue<int> frontier;
    dist[k] = 0;
    frontier.push(k);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
      }
    }

    for (int m = k + 1; m < n; ++m) {
      if (dist[m] < 0) continue;  // different components contribute 0
      long long total = 0;
      std::vector<long long> through(n, 0);
      std::vector<int> path;

      // Walk every shortest path from m back toward k along strictly
      // decreasing distances.
      auto enumerate = [&](auto&& self, int v) -> void {
        if (v == k) {
          ++total;
          for (int interior : path)
            if (interior != m) ++through[interior];
          return;
        }
        path.push_back(v);
        for (int w : adj[v]) {
          if (dist[w] == dist[v] - 1) self(self, w);
        }
        path.pop_back();
      };
      enumerate(enumerate, m);

      for (int v = 0; v < n; ++v) {
        if (v == k || v == m || through[v] == 0) continue;
        bc[v] += static_cast<double>(through[v]) / static_cast<double>(total);
      }
    }
  }
  return make_report(g, std::move(bc));
}

}  // namespace metro
