#include "warmstart/spaths.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>

#include "warmstart/classic.hpp"

namespace warmstart {

std::optional<int> re_violation(const DirectedLengthGraph& g, const DualVector& y) {
  if (static_cast<int>(y.size()) != g.num_vertices())
    throw DimensionMismatchError("dual size must equal vertex count");
  for (int a = 0; a < g.num_arcs(); ++a) {
    const LengthArc& arc = g.arc(a);
    if (arc.length + y[arc.from] - y[arc.to] < 0) return a;
  }
  return std::nullopt;
}

bool re_feasible(const DirectedLengthGraph& g, const DualVector& y) {
  return !re_violation(g, y).has_value();
}

namespace {

// Iterative Tarjan over the arcs selected by `mask`. Components are emitted
// sinks-first, so reversing the pop order yields a topological order of the
// condensation.
struct SccResult {
  std::vector<int> comp;  // per vertex
  int num_comps = 0;
};

SccResult strongly_connected_components(int n, const DirectedLengthGraph& g,
                                        const std::vector<char>& mask) {
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < g.num_arcs(); ++a)
    if (mask[a]) out[g.arc(a).from].push_back(g.arc(a).to);

  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t i;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.i < out[f.v].size()) {
        int w = out[f.v][f.i++];
        if (index[w] < 0) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
        if (lowlink[v] == index[v]) {
          int c = res.num_comps++;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            res.comp[w] = c;
            if (w == v) break;
          }
        }
      }
    }
  }
  return res;
}

// Builds a witness cycle for an arc (u,v) with negative reduced length whose
// endpoints sit in one strongly connected component of the non-positive
// subgraph: a path v -> u inside the component plus the arc itself.
[[noreturn]] void throw_contracted_cycle(const DirectedLengthGraph& g,
                                         const std::vector<char>& mask,
                                         const std::vector<int>& comp,
                                         int bad_arc) {
  const int n = g.num_vertices();
  int c = comp[g.arc(bad_arc).from];
  std::vector<int> parent_arc(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < g.num_arcs(); ++a)
    if (mask[a] && comp[g.arc(a).from] == c && comp[g.arc(a).to] == c)
      out[g.arc(a).from].push_back(a);
  int start = g.arc(bad_arc).to, goal = g.arc(bad_arc).from;
  std::deque<int> q{start};
  seen[start] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int a : out[u]) {
      int v = g.arc(a).to;
      if (seen[v]) continue;
      seen[v] = 1;
      parent_arc[v] = a;
      q.push_back(v);
    }
  }
  std::vector<int> cycle{bad_arc};
  Value total = g.arc(bad_arc).length;
  for (int v = goal; v != start; v = g.arc(parent_arc[v]).from) {
    cycle.push_back(parent_arc[v]);
    total += g.arc(parent_arc[v]).length;
  }
  std::reverse(cycle.begin() + 1, cycle.end());
  throw NegativeCycleError(std::move(cycle), total);
}

RoundResult round_impl(const DirectedLengthGraph& g, DualVector y,
                       const RoundObserver& observer,
                       const BellmanFordResult* precomputed_bf) {
  const int n = g.num_vertices();
  const int m = g.num_arcs();
  if (static_cast<int>(y.size()) != n)
    throw DimensionMismatchError("dual size must equal vertex count");

  RoundResult res;
  const DualVector initial = y;
  BellmanFordResult local_bf;
  const BellmanFordResult* bf = precomputed_bf;
  std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  bool cap_armed = false;

  auto arm_cap = [&]() {
    if (!bf) {
      local_bf = bellman_ford_all(g);
      bf = &local_bf;
    }
    if (bf->negative_cycle)
      throw NegativeCycleError(bf->negative_cycle->arc_ids,
                               bf->negative_cycle->total);
    Value l1 = 0, linf = 0;
    for (int v = 0; v < n; ++v) {
      Value d = initial[v] - bf->dual[v];
      if (d < 0) d = -d;
      l1 += d;
      linf = std::max(linf, d);
    }
    std::uint64_t a = 2 * static_cast<std::uint64_t>(l1);
    std::uint64_t b = static_cast<std::uint64_t>(linf) + 1;
    cap = (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
              ? std::numeric_limits<std::uint64_t>::max()
              : a * b + static_cast<std::uint64_t>(n);
    cap_armed = true;
  };

  std::vector<Value> red(m, 0);
  std::vector<char> nonpos(m, 0);
  for (;;) {
    bool any_negative = false;
    for (int a = 0; a < m; ++a) {
      const LengthArc& arc = g.arc(a);
      red[a] = arc.length + y[arc.from] - y[arc.to];
      nonpos[a] = red[a] <= 0;
      any_negative |= red[a] < 0;
    }
    if (!any_negative) break;

    SccResult scc = strongly_connected_components(n, g, nonpos);
    for (int a = 0; a < m; ++a)
      if (nonpos[a] && red[a] < 0 &&
          scc.comp[g.arc(a).from] == scc.comp[g.arc(a).to])
        throw_contracted_cycle(g, nonpos, scc.comp, a);

    // Depth of each component below the virtual root x (zero-length arcs to
    // everything). The condensation is a DAG; Tarjan pops sinks first, so
    // walking components in reverse pop order relaxes in topological order.
    std::vector<Value> depth(scc.num_comps, 0);
    std::vector<std::vector<std::pair<int, Value>>> comp_out(scc.num_comps);
    for (int a = 0; a < m; ++a) {
      if (!nonpos[a]) continue;
      int cu = scc.comp[g.arc(a).from], cv = scc.comp[g.arc(a).to];
      if (cu != cv) comp_out[cu].push_back({cv, red[a]});
    }
    for (int c = scc.num_comps - 1; c >= 0; --c)
      for (auto [c2, w] : comp_out[c]) depth[c2] = std::min(depth[c2], depth[c] + w);

    // Layer i holds the vertices at depth -i; pick the most populated layer
    // with i >= 1, deepest on ties, and lower everything at or below it.
    std::vector<std::int64_t> layer_size;
    int max_layer = 0;
    for (int v = 0; v < n; ++v) {
      int layer = static_cast<int>(-depth[scc.comp[v]]);
      if (layer >= static_cast<int>(layer_size.size()))
        layer_size.resize(layer + 1, 0);
      ++layer_size[layer];
      max_layer = std::max(max_layer, layer);
    }
    int istar = -1;
    for (int i = 1; i <= max_layer; ++i)
      if (layer_size[i] > 0 && (istar < 0 || layer_size[i] >= layer_size[istar]))
        istar = i;
    if (istar < 0)
      throw InvariantViolationError("negative arc present but no layer below the root");

    for (int v = 0; v < n; ++v)
      if (-depth[scc.comp[v]] >= istar) --y[v];

    ++res.counters.round_iterations;
    if (observer)
      observer(RoundIteration{res.counters.round_iterations, y, max_layer, istar});

    if (!cap_armed && res.counters.round_iterations > static_cast<std::uint64_t>(n) + 1)
      arm_cap();
    if (res.counters.round_iterations > cap)
      throw NegativeCycleError(
          "rounding iteration cap exceeded: the graph must contain a negative cycle");
  }

  assert(re_feasible(g, y));
  res.dual = std::move(y);
  return res;
}

}  // namespace

RoundResult round_re_duals(const DirectedLengthGraph& g, DualVector predicted,
                           const RoundObserver& observer) {
  return round_impl(g, std::move(predicted), observer, nullptr);
}

std::vector<Dist> sssp_with_dual(const DirectedLengthGraph& g, int source,
                                 const DualVector& y) {
  if (auto bad = re_violation(g, y))
    throw InfeasibleDualError("dual violates arc " + std::to_string(*bad));
  std::vector<LengthArc> reduced = g.arcs();
  for (int a = 0; a < g.num_arcs(); ++a)
    reduced[a].length += y[reduced[a].from] - y[reduced[a].to];
  DirectedLengthGraph rg = DirectedLengthGraph::unchecked(g.num_vertices(),
                                                          std::move(reduced));
  ShortestPathTree t = dijkstra(rg, source);
  std::vector<Dist> dist(g.num_vertices(), std::nullopt);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (t.dist[v]) dist[v] = *t.dist[v] - y[source] + y[v];
  return dist;
}

ApspResult apsp_with_prediction(const DirectedLengthGraph& g,
                                const DualVector& predicted) {
  // One up-front Bellman-Ford keeps the error semantics clean: a negative
  // cycle is reported before any rounding work happens.
  BellmanFordResult bf = bellman_ford_all(g);
  if (bf.negative_cycle)
    throw NegativeCycleError(bf.negative_cycle->arc_ids, bf.negative_cycle->total);

  ApspResult res;
  RoundResult rounded = round_impl(g, predicted, {}, &bf);
  res.counters = rounded.counters;
  res.counters.bellman_ford_passes = bf.passes;

  const int n = g.num_vertices();
  std::vector<LengthArc> reduced = g.arcs();
  for (int a = 0; a < g.num_arcs(); ++a)
    reduced[a].length +=
        rounded.dual[reduced[a].from] - rounded.dual[reduced[a].to];
  DirectedLengthGraph rg = DirectedLengthGraph::unchecked(n, std::move(reduced));

  res.dist.assign(n, std::vector<Dist>(n, std::nullopt));
  for (int u = 0; u < n; ++u) {
    ShortestPathTree t = dijkstra(rg, u);
    ++res.counters.dijkstra_calls;
    for (int v = 0; v < n; ++v)
      if (t.dist[v]) res.dist[u][v] = *t.dist[v] - rounded.dual[u] + rounded.dual[v];
  }
  return res;
}

Value diameter_with_prediction(const DirectedLengthGraph& g,
                               const DualVector& predicted) {
  ApspResult apsp = apsp_with_prediction(g, predicted);
  const int n = g.num_vertices();
  if (n == 1) return 0;
  Value diam = std::numeric_limits<Value>::min();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (!apsp.dist[u][v])
        throw DisconnectedError("diameter undefined: some pair is unreachable");
      diam = std::max(diam, *apsp.dist[u][v]);
    }
  return diam;
}

}  // namespace warmstart
