#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace phl {

/// Dinic max-flow on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

  int add_edge(int from, int to, int capacity) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity});
    graph_[static_cast<std::size_t>(from)].push_back(id);
    edges_.push_back({from, 0});
    graph_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  /// Pushes flow from s to t, stopping once `limit` units have been sent.
  int run(int s, int t, int limit = std::numeric_limits<int>::max()) {
    int total = 0;
    while (total < limit && bfs(s, t)) {
      iter_.assign(graph_.size(), 0);
      while (total < limit) {
        const int pushed = dfs(s, t, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  int flow_on(int edge_id) const { return edges_[static_cast<std::size_t>(edge_id ^ 1)].cap; }

  /// Nodes reachable from s in the residual graph (the source side of a
  /// minimum cut once run() has saturated).
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int id : graph_[static_cast<std::size_t>(u)]) {
        const auto& e = edges_[static_cast<std::size_t>(id)];
        if (e.cap > 0 && !seen[static_cast<std::size_t>(e.to)]) {
          seen[static_cast<std::size_t>(e.to)] = 1;
          stack.push_back(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    level_.assign(graph_.size(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int id : graph_[static_cast<std::size_t>(u)]) {
        const auto& e = edges_[static_cast<std::size_t>(id)];
        if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int u, int t, int want) {
    if (u == t) return want;
    auto& it = iter_[static_cast<std::size_t>(u)];
    const auto& out = graph_[static_cast<std::size_t>(u)];
    for (; it < out.size(); ++it) {
      const int id = out[it];
      auto& e = edges_[static_cast<std::size_t>(id)];
      if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] == level_[static_cast<std::size_t>(u)] + 1) {
        const int got = dfs(e.to, t, std::min(want, e.cap));
        if (got > 0) {
          e.cap -= got;
          edges_[static_cast<std::size_t>(id ^ 1)].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace phl
