#include "metro/robustness.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "metro/errors.hpp"

namespace metro {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::vector<std::vector<int>> adjacency_of(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

bool connected(int n, const EdgeList& edges) {
  if (n == 0) return false;
  auto adj = adjacency_of(n, edges);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == n;
}

// Tarjan low-link bridge search. Graphs here are simple, so skipping the
// parent vertex is enough to ignore the tree edge.
EdgeList find_bridges(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> disc(n, -1), low(n, 0);
  EdgeList bridges;
  int timer = 0;
  auto dfs = [&](auto&& self, int v, int parent) -> void {
    disc[v] = low[v] = timer++;
    for (int w : adj[v]) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.emplace_back(std::min(v, w), std::max(v, w));
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(dfs, v, -1);
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

// Components after deleting the bridges, i.e. the 2-edge-connected
// components. Component ids follow vertex discovery order.
std::vector<int> two_edge_components(int n, const std::vector<std::vector<int>>& adj,
                                     const EdgeList& bridges, int* count) {
  std::set<std::pair<int, int>> cut(bridges.begin(), bridges.end());
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = c;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (comp[w] >= 0) continue;
        if (cut.count({std::min(v, w), std::max(v, w)})) continue;
        comp[w] = c;
        q.push(w);
      }
    }
    ++c;
  }
  *count = c;
  return comp;
}

// Stoer-Wagner global minimum cut. Returns the cut weight and the vertex
// set of one side. Ties in the maximum-adjacency selection go to the
// smallest index, so the result is deterministic.
std::pair<long long, std::vector<int>> stoer_wagner(int n, const EdgeList& edges) {
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (auto [u, v] : edges) {
    w[u][v] += 1;
    w[v][u] += 1;
  }
  std::vector<std::vector<int>> members(n);
  for (int i = 0; i < n; ++i) members[i] = {i};
  std::vector<char> alive(n, 1);

  long long best = LLONG_MAX;
  std::vector<int> best_side;
  int remaining = n;
  while (remaining > 1) {
    std::vector<long long> key(n, 0);
    std::vector<char> added(n, 0);
    int prev = -1, last = -1;
    for (int it = 0; it < remaining; ++it) {
      int sel = -1;
      for (int v = 0; v < n; ++v)
        if (alive[v] && !added[v] && (sel < 0 || key[v] > key[sel])) sel = v;
      added[sel] = 1;
      prev = last;
      last = sel;
      for (int v = 0; v < n; ++v)
        if (alive[v] && !added[v]) key[v] += w[sel][v];
    }
    if (key[last] < best) {
      best = key[last];
      best_side = members[last];
    }
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || v == prev || v == last) continue;
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    alive[last] = 0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    --remaining;
  }
  std::sort(best_side.begin(), best_side.end());
  return {best, best_side};
}

int connectivity_of(int n, const EdgeList& edges) {
  if (!connected(n, edges)) return 0;
  if (n == 1) return 0;
  return static_cast<int>(stoer_wagner(n, edges).first);
}

bool k_edge_connected(int n, const EdgeList& edges, int k) {
  if (k <= 0) return true;
  if (!connected(n, edges)) return false;
  if (k == 1) return true;
  if (k == 2) return find_bridges(n, adjacency_of(n, edges)).empty();
  return connectivity_of(n, edges) >= k;
}

std::pair<std::string, std::string> id_pair(const MetroGraph& g, int i, int j) {
  std::string a = g.station(i).id, b = g.station(j).id;
  if (b < a) std::swap(a, b);
  return {a, b};
}

// All non-link pairs, optionally restricted to haversine distance < alpha,
// sorted by id pair.
EdgeList candidate_pairs(const MetroGraph& g, const std::optional<double>& alpha) {
  const int n = static_cast<int>(g.size());
  std::vector<std::pair<std::pair<std::string, std::string>, std::pair<int, int>>> sorted;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_link(i, j)) continue;
      if (alpha && !(haversine_km(g.station(i), g.station(j)) < *alpha)) continue;
      sorted.push_back({id_pair(g, i, j), {i, j}});
    }
  }
  std::sort(sorted.begin(), sorted.end());
  EdgeList out;
  out.reserve(sorted.size());
  for (auto& entry : sorted) out.push_back(entry.second);
  return out;
}

AugmentationPlan finalize_plan(const MetroGraph& g, const EdgeList& base, EdgeList added, int k,
                               bool constrained, std::optional<double> threshold) {
  EdgeList all = base;
  all.insert(all.end(), added.begin(), added.end());
  AugmentationPlan plan;
  plan.constrained = constrained;
  plan.threshold_km = threshold;
  plan.resulting_connectivity = connectivity_of(static_cast<int>(g.size()), all);
  if (plan.resulting_connectivity < k)
    throw std::logic_error("augmentation plan failed re-validation");

  for (auto [i, j] : added) {
    auto [a, b] = id_pair(g, i, j);
    plan.added.push_back({a, b, haversine_km(g.station(i), g.station(j))});
  }
  std::sort(plan.added.begin(), plan.added.end(),
            [](const AugmentationPlan::AddedEdge& x, const AugmentationPlan::AddedEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return plan;
}

struct BridgeForest {
  std::vector<int> comp;                   // vertex -> component
  int comp_count = 0;
  std::vector<std::vector<int>> tree_adj;  // component adjacency (tree for connected input)
  std::vector<int> preorder_leaves;        // degree-1 components in DFS preorder
};

BridgeForest bridge_forest(int n, const EdgeList& edges) {
  auto adj = adjacency_of(n, edges);
  auto bridges = find_bridges(n, adj);
  BridgeForest f;
  f.comp = two_edge_components(n, adj, bridges, &f.comp_count);
  f.tree_adj.assign(f.comp_count, {});
  for (auto [u, v] : bridges) {
    f.tree_adj[f.comp[u]].push_back(f.comp[v]);
    f.tree_adj[f.comp[v]].push_back(f.comp[u]);
  }
  for (auto& nb : f.tree_adj) std::sort(nb.begin(), nb.end());

  std::vector<char> seen(f.comp_count, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    if (f.tree_adj[c].size() <= 1) f.preorder_leaves.push_back(c);
    for (auto it = f.tree_adj[c].rbegin(); it != f.tree_adj[c].rend(); ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        stack.push_back(*it);
      }
    }
  }
  return f;
}

// Lexicographically smallest station pair joining two components that is
// not an existing edge of the working graph.
std::optional<std::pair<int, int>> smallest_cross_pair(const MetroGraph& g,
                                                       const std::vector<int>& comp, int ci,
                                                       int cj,
                                                       const std::set<std::pair<int, int>>& taken) {
  std::optional<std::pair<int, int>> pick;
  std::pair<std::string, std::string> pick_ids;
  for (int u = 0; u < static_cast<int>(g.size()); ++u) {
    if (comp[u] != ci) continue;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      if (comp[v] != cj) continue;
      std::pair<int, int> e{std::min(u, v), std::max(u, v)};
      if (taken.count(e)) continue;
      auto ids = id_pair(g, u, v);
      if (!pick || ids < pick_ids) {
        pick = e;
        pick_ids = ids;
      }
    }
  }
  return pick;
}

// Tree distance between two components, in bridge-tree edges.
int tree_path_length(const std::vector<std::vector<int>>& tree_adj, int from, int to) {
  if (from == to) return 0;
  std::vector<int> dist(tree_adj.size(), -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int d : tree_adj[c]) {
      if (dist[d] < 0) {
        dist[d] = dist[c] + 1;
        if (d == to) return dist[d];
        q.push(d);
      }
    }
  }
  return -1;
}

EdgeList augment_two_unconstrained(const MetroGraph& g, const EdgeList& base) {
  const int n = static_cast<int>(g.size());
  BridgeForest f = bridge_forest(n, base);
  if (f.comp_count == 1) return {};
  if (n == 2)
    throw InfeasibleError(
        "a 2-station network cannot be made 2-edge connected without parallel links", 1);

  std::set<std::pair<int, int>> taken(base.begin(), base.end());
  const auto& leaves = f.preorder_leaves;
  const int l = static_cast<int>(leaves.size());
  const int h = (l + 1) / 2;

  // Pairing leaf i with leaf i + ceil(l/2) in DFS preorder covers every
  // bridge: the leaves below any tree edge form a contiguous preorder
  // interval, and each interval is straddled by at least one pair.
  std::vector<std::pair<int, int>> comp_pairs;
  for (int i = 0; i + h < l; ++i) comp_pairs.emplace_back(leaves[i], leaves[i + h]);
  if (l % 2 == 1) comp_pairs.emplace_back(leaves[l / 2], leaves[l - 1]);

  EdgeList added;
  for (auto [ci, cj] : comp_pairs) {
    auto pick = smallest_cross_pair(g, f.comp, ci, cj, taken);
    if (!pick) throw std::logic_error("no admissible pair between bridge-tree leaves");
    added.push_back(*pick);
    taken.insert(*pick);
  }
  return added;
}

EdgeList augment_two_constrained(const MetroGraph& g, const EdgeList& base,
                                 const EdgeList& candidates) {
  const int n = static_cast<int>(g.size());
  EdgeList work = base;
  std::set<std::pair<int, int>> pool(candidates.begin(), candidates.end());
  EdgeList added;

  while (true) {
    BridgeForest f = bridge_forest(n, work);
    if (f.comp_count == 1) break;

    // Fix the leaf containing the smallest station id first.
    int leaf = -1;
    std::string leaf_key;
    for (int c : f.preorder_leaves) {
      std::string key;
      for (int v = 0; v < n; ++v)
        if (f.comp[v] == c && (key.empty() || g.station(v).id < key)) key = g.station(v).id;
      if (leaf < 0 || key < leaf_key) {
        leaf = c;
        leaf_key = key;
      }
    }

    // Among admissible pairs leaving this leaf, take the one whose
    // bridge-tree path covers the most bridges.
    std::optional<std::pair<int, int>> pick;
    int pick_score = -1;
    std::pair<std::string, std::string> pick_ids;
    for (const auto& e : pool) {
      int cu = f.comp[e.first], cv = f.comp[e.second];
      if (cu == cv) continue;
      if (cu != leaf && cv != leaf) continue;
      int score = tree_path_length(f.tree_adj, cu, cv);
      auto ids = id_pair(g, e.first, e.second);
      if (score > pick_score || (score == pick_score && ids < pick_ids)) {
        pick = e;
        pick_score = score;
        pick_ids = ids;
      }
    }
    if (!pick)
      throw InfeasibleError("constrained augmentation stalled before reaching 2-edge "
                            "connectivity",
                            1);
    added.push_back(*pick);
    work.push_back(*pick);
    pool.erase(*pick);
  }
  return added;
}

EdgeList augment_mincut_greedy(const MetroGraph& g, const EdgeList& base,
                               const EdgeList& candidates, int k, int best_possible) {
  const int n = static_cast<int>(g.size());
  EdgeList work = base;
  std::vector<std::pair<int, int>> pool = candidates;  // kept in lexicographic id order
  EdgeList added;

  while (true) {
    auto [cut, side] = stoer_wagner(n, work);
    if (cut >= k) break;
    std::vector<char> in_side(n, 0);
    for (int v : side) in_side[v] = 1;

    auto it = std::find_if(pool.begin(), pool.end(), [&](const std::pair<int, int>& e) {
      return in_side[e.first] != in_side[e.second];
    });
    if (it == pool.end())
      throw InfeasibleError("no admissible pair crosses the current minimum cut",
                            best_possible);
    added.push_back(*it);
    work.push_back(*it);
    pool.erase(it);
  }
  return added;
}

}  // namespace

int edge_connectivity(const MetroGraph& g) {
  if (g.size() < 2)
    throw ValidationError("edge connectivity requires at least two stations");
  if (!is_connected(g)) return 0;
  return static_cast<int>(stoer_wagner(static_cast<int>(g.size()), g.link_indices()).first);
}

int brute_force_connectivity(const MetroGraph& g) {
  if (g.size() < 2)
    throw ValidationError("edge connectivity requires at least two stations");
  const EdgeList& edges = g.link_indices();
  const int m = static_cast<int>(edges.size());
  if (m > 20) throw ValidationError("brute_force_connectivity: too many edges (> 20)");
  const int n = static_cast<int>(g.size());
  if (!connected(n, edges)) return 0;

  for (int s = 1; s <= m; ++s) {
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      EdgeList remaining;
      int next = 0;
      for (int i = 0; i < m; ++i) {
        if (next < s && pick[next] == i) {
          ++next;
          continue;
        }
        remaining.push_back(edges[i]);
      }
      if (!connected(n, remaining)) return s;

      int pos = s - 1;
      while (pos >= 0 && pick[pos] == m - s + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < s; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return m;  // unreachable for n >= 2: removing every edge disconnects
}

AugmentationPlan augment(const MetroGraph& g, int k, std::optional<double> max_dist_km) {
  if (k < 1) throw std::invalid_argument("augment: k must be >= 1");
  if (g.size() < 2) throw ValidationError("augment requires at least two stations");
  if (!is_connected(g)) throw ValidationError("augment requires a connected graph");

  const int n = static_cast<int>(g.size());
  const EdgeList& base = g.link_indices();
  const bool constrained = max_dist_km.has_value();

  if (k == 1 || k_edge_connected(n, base, k))
    return finalize_plan(g, base, {}, k, constrained, max_dist_km);

  EdgeList candidates = candidate_pairs(g, max_dist_km);

  // Largest connectivity reachable with every admissible pair added at once.
  EdgeList saturated = base;
  saturated.insert(saturated.end(), candidates.begin(), candidates.end());
  const int best_possible = connectivity_of(n, saturated);
  if (best_possible < k) {
    throw InfeasibleError("augmentation to k=" + std::to_string(k) +
                              (constrained ? " is infeasible under the distance threshold"
                                           : " is infeasible"),
                          best_possible);
  }

  EdgeList added;
  if (k == 2 && !constrained) {
    added = augment_two_unconstrained(g, base);
  } else if (k == 2) {
    added = augment_two_constrained(g, base, candidates);
    if (n <= 10) {
      AugmentationPlan exact = brute_force_augment(g, k, max_dist_km);
      if (exact.added.size() < added.size())
        return exact;
    }
  } else {
    added = augment_mincut_greedy(g, base, candidates, k, best_possible);
  }
  return finalize_plan(g, base, std::move(added), k, constrained, max_dist_km);
}

AugmentationPlan brute_force_augment(const MetroGraph& g, int k,
                                     std::optional<double> max_dist_km) {
  if (k < 1) throw std::invalid_argument("brute_force_augment: k must be >= 1");
  if (g.size() > 10) throw ValidationError("brute_force_augment: graph too large (N > 10)");
  if (g.size() < 2) throw ValidationError("augment requires at least two stations");
  if (!is_connected(g)) throw ValidationError("augment requires a connected graph");

  const int n = static_cast<int>(g.size());
  const EdgeList& base = g.link_indices();
  const bool constrained = max_dist_km.has_value();
  if (k_edge_connected(n, base, k))
    return finalize_plan(g, base, {}, k, constrained, max_dist_km);

  EdgeList candidates = candidate_pairs(g, max_dist_km);
  const int m = static_cast<int>(candidates.size());

  EdgeList saturated = base;
  saturated.insert(saturated.end(), candidates.begin(), candidates.end());
  const int best_possible = connectivity_of(n, saturated);
  if (best_possible < k)
    throw InfeasibleError("augmentation to k=" + std::to_string(k) + " is infeasible",
                          best_possible);

  long long budget = 20'000'000;  // subset evaluations
  for (int s = 1; s <= m; ++s) {
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      if (--budget < 0)
        throw ValidationError("brute_force_augment: search space too large");
      EdgeList trial = base;
      for (int i : pick) trial.push_back(candidates[i]);
      if (k_edge_connected(n, trial, k)) {
        EdgeList added;
        for (int i : pick) added.push_back(candidates[i]);
        return finalize_plan(g, base, std::move(added), k, constrained, max_dist_km);
      }
      int pos = s - 1;
      while (pos >= 0 && pick[pos] == m - s + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < s; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  throw InfeasibleError("augmentation to k=" + std::to_string(k) + " is infeasible",
                        best_possible);
}

}  // namespace metro
