#include "warmstart/classic.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <queue>
#include <utility>

namespace warmstart {

ShortestPathTree dijkstra(const DirectedLengthGraph& g, int source) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < g.num_arcs(); ++a) {
    if (g.arc(a).length < 0)
      throw InvariantViolationError("dijkstra fed a negative arc length");
    out[g.arc(a).from].push_back(a);
  }

  ShortestPathTree t;
  t.dist.assign(n, std::nullopt);
  t.parent_arc.assign(n, -1);
  using Item = std::pair<Value, int>;  // (dist, vertex): lowest id wins ties
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  t.dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (!t.dist[u] || *t.dist[u] < d) continue;
    for (int a : out[u]) {
      const LengthArc& arc = g.arc(a);
      Value nd = d + arc.length;
      if (!t.dist[arc.to] || nd < *t.dist[arc.to]) {
        t.dist[arc.to] = nd;
        t.parent_arc[arc.to] = a;
        pq.push({nd, arc.to});
      }
    }
  }
  return t;
}

namespace {

// Shared Bellman-Ford body. `roots` carries the initial distance-0 vertices.
BellmanFordResult bellman_ford_from(const DirectedLengthGraph& g,
                                    const std::vector<int>& roots) {
  const int n = g.num_vertices();
  BellmanFordResult res;
  res.dist.assign(n, std::nullopt);
  std::vector<int> parent(n, -1);
  for (int r : roots) res.dist[r] = 0;

  int changed_vertex = -1;
  for (int pass = 0; pass < n; ++pass) {
    changed_vertex = -1;
    for (int a = 0; a < g.num_arcs(); ++a) {
      const LengthArc& arc = g.arc(a);
      if (!res.dist[arc.from]) continue;
      Value nd = *res.dist[arc.from] + arc.length;
      if (!res.dist[arc.to] || nd < *res.dist[arc.to]) {
        res.dist[arc.to] = nd;
        parent[arc.to] = a;
        changed_vertex = arc.to;
      }
    }
    ++res.passes;
    if (changed_vertex < 0) break;
  }

  if (changed_vertex >= 0) {
    // A relaxation succeeded on the n-th pass: walk parents n steps to land
    // inside a cycle, then trace it out.
    int v = changed_vertex;
    for (int i = 0; i < n; ++i) v = g.arc(parent[v]).from;
    NegativeCycleWitness w;
    int u = v;
    do {
      int a = parent[u];
      w.arc_ids.push_back(a);
      w.total += g.arc(a).length;
      u = g.arc(a).from;
    } while (u != v);
    std::reverse(w.arc_ids.begin(), w.arc_ids.end());
    assert(w.total < 0);
    res.negative_cycle = std::move(w);
    return res;
  }

  res.dual.assign(n, 0);
  for (int v = 0; v < n; ++v)
    if (res.dist[v]) res.dual[v] = *res.dist[v];
  return res;
}

}  // namespace

BellmanFordResult bellman_ford(const DirectedLengthGraph& g, int source) {
  return bellman_ford_from(g, {source});
}

BellmanFordResult bellman_ford_all(const DirectedLengthGraph& g) {
  std::vector<int> roots(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) roots[v] = v;
  BellmanFordResult res = bellman_ford_from(g, roots);
  // Every vertex is a root, so "unreached" cannot happen and the dual is
  // feasible on all arcs.
  return res;
}

namespace {

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_l, match_r, layer;

  HopcroftKarp(int n_left, int n_right, const std::vector<std::vector<int>>& adj)
      : adj(adj), match_l(n_left, -1), match_r(n_right, -1), layer(n_left, -1) {}

  bool bfs() {
    std::deque<int> q;
    bool reachable_free = false;
    for (int i = 0; i < static_cast<int>(match_l.size()); ++i) {
      layer[i] = match_l[i] < 0 ? 0 : -1;
      if (layer[i] == 0) q.push_back(i);
    }
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j : adj[i]) {
        int i2 = match_r[j];
        if (i2 < 0) {
          reachable_free = true;
        } else if (layer[i2] < 0) {
          layer[i2] = layer[i] + 1;
          q.push_back(i2);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int i) {
    for (int j : adj[i]) {
      int i2 = match_r[j];
      if (i2 < 0 || (layer[i2] == layer[i] + 1 && dfs(i2))) {
        match_l[i] = j;
        match_r[j] = i;
        return true;
      }
    }
    layer[i] = -1;  // dead end for this phase
    return false;
  }

  void run() {
    while (bfs()) {
      for (int i = 0; i < static_cast<int>(match_l.size()); ++i)
        if (match_l[i] < 0) dfs(i);
    }
  }
};

}  // namespace

std::vector<int> hopcroft_karp(int n_left, int n_right,
                               const std::vector<std::vector<int>>& adj) {
  HopcroftKarp hk(n_left, n_right, adj);
  hk.run();
  return hk.match_l;
}

namespace {

Value ff_dfs(ResidualNetwork& rn, int u, int t, Value limit,
             const std::vector<char>* mask, std::vector<char>& visited) {
  if (u == t) return limit;
  visited[u] = 1;
  for (int rid : rn.out(u)) {
    if (mask && !(*mask)[rid]) continue;
    Value r = rn.residual(rid);
    if (r <= 0) continue;
    int v = rn.head(rid);
    if (visited[v]) continue;
    Value pushed = ff_dfs(rn, v, t, std::min(limit, r), mask, visited);
    if (pushed > 0) {
      rn.augment(rid, pushed);
      return pushed;
    }
  }
  return 0;
}

}  // namespace

Value ford_fulkerson(ResidualNetwork& rn, int s, int t, Value flow_cap,
                     const std::vector<char>* mask, OpCounters* counters) {
  Value total = 0;
  const Value kNoLimit = Value{1} << 62;
  while (flow_cap < 0 || total < flow_cap) {
    Value limit = flow_cap < 0 ? kNoLimit : flow_cap - total;
    std::vector<char> visited(rn.network().num_vertices(), 0);
    Value pushed = ff_dfs(rn, s, t, limit, mask, visited);
    if (pushed == 0) break;
    total += pushed;
    if (counters) ++counters->ff_augmentations;
  }
  return total;
}

MaxFlowResult edmonds_karp(const FlowNetwork& net) {
  ResidualNetwork rn(net);
  const int n = net.num_vertices();
  Value value = 0;
  for (;;) {
    std::vector<int> parent_rid(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<int> q{net.source()};
    seen[net.source()] = 1;
    while (!q.empty() && !seen[net.sink()]) {
      int u = q.front();
      q.pop_front();
      for (int rid : rn.out(u)) {
        int v = rn.head(rid);
        if (seen[v] || rn.residual(rid) <= 0) continue;
        seen[v] = 1;
        parent_rid[v] = rid;
        q.push_back(v);
      }
    }
    if (!seen[net.sink()]) break;
    Value delta = Value{1} << 62;
    for (int v = net.sink(); v != net.source(); v = rn.tail(parent_rid[v]))
      delta = std::min(delta, rn.residual(parent_rid[v]));
    for (int v = net.sink(); v != net.source(); v = rn.tail(parent_rid[v]))
      rn.augment(parent_rid[v], delta);
    value += delta;
  }

  MaxFlowResult res{value, rn.state(), std::vector<char>(n, 0)};
  std::deque<int> q{net.source()};
  res.source_side[net.source()] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int rid : rn.out(u)) {
      int v = rn.head(rid);
      if (!res.source_side[v] && rn.residual(rid) > 0) {
        res.source_side[v] = 1;
        q.push_back(v);
      }
    }
  }
  return res;
}

}  // namespace warmstart
