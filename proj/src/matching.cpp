#include "warmstart/matching.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <queue>

#include "warmstart/classic.hpp"

namespace warmstart {

std::optional<int> matching_violation(const BipartiteInstance& inst,
                                      const DualVector& y) {
  if (static_cast<int>(y.size()) != inst.num_vertices())
    throw DimensionMismatchError("dual size must equal n_left + n_right");
  for (int e = 0; e < inst.num_edges(); ++e) {
    const BipartiteEdge& edge = inst.edge(e);
    if (y[inst.left_id(edge.left)] + y[inst.right_id(edge.right)] > edge.cost)
      return e;
  }
  return std::nullopt;
}

bool matching_feasible(const BipartiteInstance& inst, const DualVector& y) {
  return !matching_violation(inst, y).has_value();
}

DualVector repair_matching_duals(const BipartiteInstance& inst,
                                 const DualVector& predicted) {
  if (static_cast<int>(predicted.size()) != inst.num_vertices())
    throw DimensionMismatchError("dual size must equal n_left + n_right");
  DualVector y = predicted;
  for (int e = 0; e < inst.num_edges(); ++e) {
    const BipartiteEdge& edge = inst.edge(e);
    int i = inst.left_id(edge.left);
    Value cap = edge.cost - predicted[inst.right_id(edge.right)];
    y[i] = std::min(y[i], cap);
  }
  return y;
}

namespace {

// Flow representation used by the perfect-matching solver.
//
// Vertices: 0..n-1 left, n..2n-1 right, s = 2n, t = 2n+1. Arc ids:
//   e in [0,m)        left(e) -> right(e), capacity 1, reduced cost c'_e
//   m+i, i in [0,n)   s -> i, capacity 1, reduced cost 0
//   m+n+j, j in [0,n) n+j -> t, capacity 1, reduced cost 0
struct MwpmSolver {
  const BipartiteInstance& inst;
  int n, m, s, t;
  std::vector<Value> z;       // potentials over left/right vertices (z_s=z_t=0)
  std::vector<Value> cprime;  // reduced cost per original edge
  std::vector<char> flow;     // 0/1 per arc
  OpCounters counters;

  explicit MwpmSolver(const BipartiteInstance& inst)
      : inst(inst),
        n(inst.n_left()),
        m(inst.num_edges()),
        s(2 * inst.n_left()),
        t(2 * inst.n_left() + 1),
        z(2 * inst.n_left(), 0),
        cprime(inst.num_edges(), 0),
        flow(inst.num_edges() + 2 * inst.n_left(), 0) {}

  int left_of(int e) const { return inst.edge(e).left; }
  int right_of(int e) const { return n + inst.edge(e).right; }

  void recompute_reduced_costs() {
    for (int e = 0; e < m; ++e)
      cprime[e] = inst.edge(e).cost + z[left_of(e)] - z[right_of(e)];
  }

  // Residual arcs in a fixed order per tail vertex; costs are c' forward and
  // -c' backward (0 on anything touching s or t).
  struct ResArc {
    int head;
    Value cost;
    int arc_id;  // underlying arc
    bool forward;
  };

  std::vector<std::vector<ResArc>> residual_adjacency() const {
    std::vector<std::vector<ResArc>> out(2 * n + 2);
    for (int e = 0; e < m; ++e) {
      if (!flow[e])
        out[left_of(e)].push_back({right_of(e), cprime[e], e, true});
      else
        out[right_of(e)].push_back({left_of(e), -cprime[e], e, false});
    }
    for (int i = 0; i < n; ++i) {
      int a = m + i;
      if (!flow[a])
        out[s].push_back({i, 0, a, true});
      else
        out[i].push_back({s, 0, a, false});
    }
    for (int j = 0; j < n; ++j) {
      int a = m + n + j;
      if (!flow[a])
        out[n + j].push_back({t, 0, a, true});
      else
        out[t].push_back({n + j, 0, a, false});
    }
    return out;
  }

  void assert_residual_nonnegative() const {
#ifndef NDEBUG
    for (int e = 0; e < m; ++e) {
      Value rc = flow[e] ? -cprime[e] : cprime[e];
      assert(rc >= 0 && "residual reduced cost went negative");
    }
#endif
  }

  std::vector<Dist> dijkstra_residual() {
    ++counters.dijkstra_calls;
    auto out = residual_adjacency();
    std::vector<Dist> dist(2 * n + 2, std::nullopt);
    using Item = std::pair<Value, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (!dist[u] || *dist[u] < d) continue;
      for (const ResArc& ra : out[u]) {
        assert(ra.cost >= 0);
        Value nd = d + ra.cost;
        if (!dist[ra.head] || nd < *dist[ra.head]) {
          dist[ra.head] = nd;
          pq.push({nd, ra.head});
        }
      }
    }
    return dist;
  }

  // DFS augmentation restricted to zero-reduced-cost residual arcs; applied
  // directly to the main flow (reverse arcs of zero-cost pushes are zero-cost
  // again, so the restriction is stable).
  bool augment_once() {
    std::vector<char> visited(2 * n + 2, 0);
    return dfs_zero(s, visited);
  }

  bool dfs_zero(int u, std::vector<char>& visited) {
    if (u == t) return true;
    visited[u] = 1;
    // Scan in the same deterministic order as residual_adjacency().
    if (u < n) {  // left vertex: forward edge arcs, then backward s-arc
      for (int e : edges_at_left[u]) {
        if (flow[e] || cprime[e] != 0) continue;
        int v = right_of(e);
        if (visited[v]) continue;
        if (dfs_zero(v, visited)) {
          flow[e] = 1;
          return true;
        }
      }
      int a = m + u;
      if (flow[a] && !visited[s] && dfs_zero(s, visited)) {
        flow[a] = 0;
        return true;
      }
    } else if (u < 2 * n) {  // right vertex: t-arc, then backward edge arcs
      int j = u - n;
      int a = m + n + j;
      if (!flow[a] && !visited[t] && dfs_zero(t, visited)) {
        flow[a] = 1;
        return true;
      }
      for (int e : edges_at_right[j]) {
        if (!flow[e] || -cprime[e] != 0) continue;
        int v = left_of(e);
        if (visited[v]) continue;
        if (dfs_zero(v, visited)) {
          flow[e] = 0;
          return true;
        }
      }
    } else if (u == s) {
      for (int i = 0; i < n; ++i) {
        int a = m + i;
        if (flow[a] || visited[i]) continue;
        if (dfs_zero(i, visited)) {
          flow[a] = 1;
          return true;
        }
      }
    }
    return false;
  }

  std::vector<std::vector<int>> edges_at_left, edges_at_right;

  MatchingResult run(const DualVector& y) {
    edges_at_left.assign(n, {});
    edges_at_right.assign(n, {});
    for (int e = 0; e < m; ++e) {
      edges_at_left[inst.edge(e).left].push_back(e);
      edges_at_right[inst.edge(e).right].push_back(e);
    }

    for (int i = 0; i < n; ++i) z[i] = -y[i];
    for (int j = 0; j < n; ++j) z[n + j] = y[n + j];
    recompute_reduced_costs();

    // Maximum-cardinality matching on the tight subgraph seeds the flow.
    std::vector<std::vector<int>> tight(n);
    std::vector<std::map<int, int>> tight_edge(n);  // (i,j) -> lowest edge id
    for (int e = 0; e < m; ++e) {
      if (cprime[e] != 0) continue;
      const BipartiteEdge& edge = inst.edge(e);
      if (tight_edge[edge.left].emplace(edge.right, e).second)
        tight[edge.left].push_back(edge.right);
    }
    std::vector<int> match = hopcroft_karp(n, n, tight);
    Value flow_value = 0;
    for (int i = 0; i < n; ++i) {
      if (match[i] < 0) continue;
      int e = tight_edge[i].at(match[i]);
      flow[e] = 1;
      flow[m + i] = 1;
      flow[m + n + match[i]] = 1;
      ++flow_value;
    }
    counters.first_match_size = static_cast<std::uint64_t>(flow_value);
    assert_residual_nonnegative();

    while (flow_value < n) {
      ++counters.while_iterations;
      std::vector<Dist> dist = dijkstra_residual();
      if (!dist[t])
        throw NoPerfectMatchingError("sink unreachable: no perfect matching exists");
      Value dt = *dist[t];
      // Raise potentials by distances capped at d(s,t); unreached vertices
      // get the cap. Keeps residual reduced costs non-negative and leaves
      // every shortest s-t path at reduced cost zero.
      for (int u = 0; u < 2 * n; ++u)
        z[u] += dist[u] ? std::min(*dist[u], dt) : dt;
      recompute_reduced_costs();
      assert_residual_nonnegative();

      Value before = flow_value;
      while (augment_once()) {
        ++counters.ff_augmentations;
        ++flow_value;
      }
      assert(flow_value > before && "augmentation round made no progress");
      (void)before;
    }

    MatchingResult res;
    res.edge_multiplicity.assign(m, 0);
    for (int e = 0; e < m; ++e) {
      if (!flow[e]) continue;
      res.matched_edges.push_back(e);
      res.edge_multiplicity[e] = 1;
      res.total_cost += inst.edge(e).cost;
    }
    res.final_duals.assign(2 * n, 0);
    for (int i = 0; i < n; ++i) res.final_duals[i] = -z[i];
    for (int j = 0; j < n; ++j) res.final_duals[n + j] = z[n + j];
    res.counters = counters;
    return res;
  }
};

}  // namespace

MatchingResult solve_mwpm(const BipartiteInstance& inst,
                          const DualVector& feasible_dual) {
  if (inst.n_left() != inst.n_right())
    throw InvalidInstanceError("perfect matching requires n_left == n_right");
  if (auto bad = matching_violation(inst, feasible_dual))
    throw InfeasibleDualError("dual violates edge " + std::to_string(*bad));
  MwpmSolver solver(inst);
  return solver.run(feasible_dual);
}

namespace {

// b-matching network: s -> i with capacity b_i, tight edges i -> j with
// "infinite" capacity (sum of left demands), j -> t with capacity b_j. The
// flow is kept across dual updates; edges that fall out of the tight set
// never carry flow at that moment, so the running max flow stays feasible.
struct MwbmSolver {
  const BipartiteInstance& inst;
  int nl, nr, m;
  Value total_demand;
  DualVector y;
  std::vector<char> tight;       // per edge
  std::vector<Value> flow_edge;  // per edge
  std::vector<Value> flow_s;     // per left vertex
  std::vector<Value> flow_t;     // per right vertex
  OpCounters counters;

  MwbmSolver(const BipartiteInstance& inst, const DualVector& y0)
      : inst(inst),
        nl(inst.n_left()),
        nr(inst.n_right()),
        m(inst.num_edges()),
        total_demand(0),
        y(y0),
        tight(inst.num_edges(), 0),
        flow_edge(inst.num_edges(), 0),
        flow_s(inst.n_left(), 0),
        flow_t(inst.n_right(), 0) {
    for (int i = 0; i < nl; ++i) total_demand += inst.demand(inst.left_id(i));
  }

  Value slack(int e) const {
    const BipartiteEdge& edge = inst.edge(e);
    return edge.cost - y[inst.left_id(edge.left)] - y[inst.right_id(edge.right)];
  }

  void refresh_tight() {
    for (int e = 0; e < m; ++e) {
      tight[e] = slack(e) == 0;
      assert(tight[e] || flow_edge[e] == 0);
    }
  }

  // DFS over the residual network restricted to tight middle edges.
  Value push_path(int u, Value limit, std::vector<char>& visited) {
    // u encoding: 0 = s, 1..nl = left, nl+1..nl+nr = right, nl+nr+1 = t.
    const int t_node = nl + nr + 1;
    if (u == t_node) return limit;
    visited[u] = 1;
    if (u == 0) {
      for (int i = 0; i < nl; ++i) {
        Value r = inst.demand(inst.left_id(i)) - flow_s[i];
        if (r <= 0 || visited[1 + i]) continue;
        Value pushed = push_path(1 + i, std::min(limit, r), visited);
        if (pushed > 0) {
          flow_s[i] += pushed;
          return pushed;
        }
      }
    } else if (u <= nl) {
      int i = u - 1;
      for (int e : edges_at_left[i]) {
        if (!tight[e]) continue;  // untight edges are unusable forward
        int v = 1 + nl + inst.edge(e).right;
        if (visited[v]) continue;
        Value pushed = push_path(v, limit, visited);  // capacity is "infinite"
        if (pushed > 0) {
          flow_edge[e] += pushed;
          return pushed;
        }
      }
      if (flow_s[i] > 0 && !visited[0]) {
        Value pushed = push_path(0, std::min(limit, flow_s[i]), visited);
        if (pushed > 0) {
          flow_s[i] -= pushed;
          return pushed;
        }
      }
    } else {
      int j = u - 1 - nl;
      Value r = inst.demand(inst.right_id(j)) - flow_t[j];
      if (r > 0 && !visited[t_node]) {
        Value pushed = push_path(t_node, std::min(limit, r), visited);
        if (pushed > 0) {
          flow_t[j] += pushed;
          return pushed;
        }
      }
      for (int e : edges_at_right[j]) {
        if (flow_edge[e] <= 0) continue;
        int v = 1 + inst.edge(e).left;
        if (visited[v]) continue;
        Value pushed = push_path(v, std::min(limit, flow_edge[e]), visited);
        if (pushed > 0) {
          flow_edge[e] -= pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  Value max_flow_continue(OpCounters* count_into) {
    Value added = 0;
    for (;;) {
      std::vector<char> visited(nl + nr + 2, 0);
      Value pushed = push_path(0, total_demand, visited);
      if (pushed == 0) break;
      added += pushed;
      // Accounted per unit: the augmentation work is linear per unit pushed.
      if (count_into)
        count_into->ff_augmentations += static_cast<std::uint64_t>(pushed);
    }
    return added;
  }

  // Left vertices reachable from s in the residual of the current max flow.
  // With the flow maximum this witnesses a demand-weighted Hall violation.
  void reachable(std::vector<char>& left_reach, std::vector<char>& right_reach) {
    left_reach.assign(nl, 0);
    right_reach.assign(nr, 0);
    std::deque<int> q;
    for (int i = 0; i < nl; ++i)
      if (flow_s[i] < inst.demand(inst.left_id(i))) {
        left_reach[i] = 1;
        q.push_back(i);
      }
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int e : edges_at_left[i]) {
        if (!tight[e]) continue;
        int j = inst.edge(e).right;
        if (right_reach[j]) continue;
        right_reach[j] = 1;
        for (int e2 : edges_at_right[j]) {
          if (flow_edge[e2] <= 0) continue;
          int i2 = inst.edge(e2).left;
          if (!left_reach[i2]) {
            left_reach[i2] = 1;
            q.push_back(i2);
          }
        }
      }
    }
  }

  std::vector<std::vector<int>> edges_at_left, edges_at_right;

  MatchingResult run() {
    edges_at_left.assign(nl, {});
    edges_at_right.assign(nr, {});
    for (int e = 0; e < m; ++e) {
      edges_at_left[inst.edge(e).left].push_back(e);
      edges_at_right[inst.edge(e).right].push_back(e);
    }

    Value right_demand = 0;
    for (int j = 0; j < nr; ++j) right_demand += inst.demand(inst.right_id(j));
    if (right_demand != total_demand)
      throw NoPerfectBMatchingError("left and right demand totals differ");

    refresh_tight();
    Value flow_value = max_flow_continue(nullptr);
    counters.first_match_size = static_cast<std::uint64_t>(flow_value);

    while (flow_value < total_demand) {
      ++counters.while_iterations;
      std::vector<char> left_reach, gamma;
      // gamma is the tight-subgraph neighbourhood of the deficient set; the
      // residual search reaches exactly those right vertices.
      reachable(left_reach, gamma);

      Value eps = std::numeric_limits<Value>::max();
      for (int e = 0; e < m; ++e) {
        if (!left_reach[inst.edge(e).left] || gamma[inst.edge(e).right]) continue;
        eps = std::min(eps, slack(e));
      }
      if (eps == std::numeric_limits<Value>::max())
        throw NoPerfectBMatchingError(
            "demand-weighted Hall condition violated: no perfect b-matching");
      assert(eps > 0);

      for (int i = 0; i < nl; ++i)
        if (left_reach[i]) y[inst.left_id(i)] += eps;
      for (int j = 0; j < nr; ++j)
        if (gamma[j]) y[inst.right_id(j)] -= eps;
      refresh_tight();

      flow_value += max_flow_continue(&counters);
    }

    MatchingResult res;
    res.edge_multiplicity = flow_edge;
    for (int e = 0; e < m; ++e) {
      if (flow_edge[e] <= 0) continue;
      res.matched_edges.push_back(e);
      res.total_cost += flow_edge[e] * inst.edge(e).cost;
    }
    res.final_duals = y;
    res.counters = counters;
    return res;
  }
};

}  // namespace

MatchingResult solve_mwbm(const BipartiteInstance& inst,
                          const DualVector& feasible_dual) {
  if (auto bad = matching_violation(inst, feasible_dual))
    throw InfeasibleDualError("dual violates edge " + std::to_string(*bad));
  MwbmSolver solver(inst, feasible_dual);
  return solver.run();
}

DualVector optimal_matching_dual(const BipartiteInstance& inst) {
  DualVector zero(inst.num_vertices(), 0);
  MatchingResult res = solve_mwpm(inst, zero);
#ifndef NDEBUG
  for (int e : res.matched_edges) {
    const BipartiteEdge& edge = inst.edge(e);
    assert(res.final_duals[inst.left_id(edge.left)] +
               res.final_duals[inst.right_id(edge.right)] ==
           edge.cost);
  }
#endif
  return res.final_duals;
}

}  // namespace warmstart
