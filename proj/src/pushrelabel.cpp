#include "warmstart/pushrelabel.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <set>

namespace warmstart {

namespace {

// Cancels every directed cycle in the support of `flow` (arcs with positive
// flow) by removing the smallest flow along the cycle. Each round zeroes at
// least one arc.
void cancel_support_cycles(const FlowNetwork& net, std::vector<Value>& flow) {
  const int n = net.num_vertices();
  const int m = net.num_arcs();
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < m; ++a)
    if (net.arc(a).from != net.arc(a).to) out[net.arc(a).from].push_back(a);

  for (;;) {
    std::vector<int> color(n, 0);  // 0 fresh, 1 on path, 2 done
    std::vector<int> path_arcs;
    bool cancelled = false;

    // Iterative DFS keeping the current path of support arcs.
    struct Frame {
      int v;
      std::size_t i;
    };
    for (int root = 0; root < n && !cancelled; ++root) {
      if (color[root] != 0) continue;
      std::vector<Frame> frames{{root, 0}};
      color[root] = 1;
      while (!frames.empty() && !cancelled) {
        Frame& f = frames.back();
        bool descended = false;
        while (f.i < out[f.v].size()) {
          int a = out[f.v][f.i++];
          if (flow[a] <= 0) continue;
          int w = net.arc(a).to;
          if (color[w] == 1) {
            // Found a cycle: the tail of path_arcs from w onwards, plus a.
            std::vector<int> cycle;
            std::size_t k = path_arcs.size();
            while (k > 0 && net.arc(path_arcs[k - 1]).to != w) --k;
            // k-1 .. end is the path w ->* f.v when w is an ancestor; when
            // the path is empty the cycle is the single arc a (w == f.v is
            // impossible for self-loop-free support, so path covers it).
            std::size_t start = k == 0 ? path_arcs.size() : k - 1;
            for (std::size_t idx = start; idx < path_arcs.size(); ++idx)
              cycle.push_back(path_arcs[idx]);
            cycle.push_back(a);
            Value delta = std::numeric_limits<Value>::max();
            for (int ca : cycle) delta = std::min(delta, flow[ca]);
            for (int ca : cycle) flow[ca] -= delta;
            cancelled = true;
            break;
          }
          if (color[w] == 0) {
            color[w] = 1;
            path_arcs.push_back(a);
            frames.push_back({w, 0});
            descended = true;
            break;
          }
        }
        if (cancelled) break;
        if (!descended && (frames.empty() || f.i >= out[f.v].size())) {
          color[f.v] = 2;
          frames.pop_back();
          if (!path_arcs.empty() && !frames.empty()) path_arcs.pop_back();
        }
      }
      path_arcs.clear();
    }
    if (!cancelled) return;
  }
}

// Topological order of the support DAG (every vertex appears).
std::vector<int> support_topo_order(const FlowNetwork& net,
                                    const std::vector<Value>& flow) {
  const int n = net.num_vertices();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < net.num_arcs(); ++a) {
    if (flow[a] <= 0 || net.arc(a).from == net.arc(a).to) continue;
    out[net.arc(a).from].push_back(net.arc(a).to);
    ++indeg[net.arc(a).to];
  }
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  std::vector<int> order;
  order.reserve(n);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  assert(static_cast<int>(order.size()) == n && "support graph not acyclic");
  return order;
}

}  // namespace

FlowState make_acyclic(const FlowNetwork& net, FlowState flow) {
  std::vector<Value> f = flow.values();
  cancel_support_cycles(net, f);
  return FlowState(net, std::move(f));
}

FlowState fix_preflow(const FlowNetwork& net, const PreflowPrediction& pred) {
  const int m = net.num_arcs();
  if (static_cast<int>(pred.flow.size()) != m)
    throw DimensionMismatchError("prediction size must equal arc count");
  for (Value v : pred.flow)
    if (v < 0) throw InvalidParamsError("predicted flow must be non-negative");

  std::vector<Value> f = pred.flow;
  // Flow into the source or out of the sink serves nothing and would leave
  // residual arcs out of the height-n source; drop it before anything else.
  for (int a = 0; a < m; ++a) {
    if (net.arc(a).to == net.source()) f[a] = 0;
    if (net.arc(a).from == net.sink()) f[a] = 0;
    if (net.arc(a).from == net.arc(a).to) f[a] = 0;
  }
  cancel_support_cycles(net, f);

  std::vector<std::vector<int>> out_arcs(net.num_vertices());
  for (int a = 0; a < m; ++a) out_arcs[net.arc(a).from].push_back(a);

  // Inflows of a vertex are final once its topological predecessors are done,
  // so a single left-to-right sweep restores capacity and weak conservation.
  std::vector<Value> excess(net.num_vertices(), 0);
  for (int a = 0; a < m; ++a)
    if (f[a] > 0) excess[net.arc(a).to] += f[a];
  for (int v : support_topo_order(net, f)) {
    for (int a : out_arcs[v]) {
      if (f[a] > net.arc(a).capacity) {
        excess[net.arc(a).to] -= f[a] - net.arc(a).capacity;
        f[a] = net.arc(a).capacity;
      }
    }
    if (v == net.source() || v == net.sink()) continue;
    Value outflow = 0;
    for (int a : out_arcs[v]) outflow += f[a];
    Value deficit = outflow - excess[v];
    for (int a : out_arcs[v]) {
      if (deficit <= 0) break;
      Value cut = std::min(deficit, f[a]);
      f[a] -= cut;
      excess[net.arc(a).to] -= cut;
      deficit -= cut;
    }
  }

  for (int a : out_arcs[net.source()])
    if (net.arc(a).to != net.source()) f[a] = net.arc(a).capacity;

  FlowState result(net, std::move(f));
  assert(result.is_preflow());
  return result;
}

HeightLabeling shortest_path_labeling(const FlowNetwork& net, const FlowState& f) {
  const int n = net.num_vertices();
  const int m = net.num_arcs();
  // BFS from t along reversed residual arcs.
  std::vector<std::vector<int>> rev(n);
  for (int a = 0; a < m; ++a) {
    const FlowArc& arc = net.arc(a);
    if (arc.from == arc.to) continue;
    if (f.flow(a) < arc.capacity) rev[arc.to].push_back(arc.from);
    if (f.flow(a) > 0) rev[arc.from].push_back(arc.to);
  }
  std::vector<int> dist(n, -1);
  std::deque<int> q{net.sink()};
  dist[net.sink()] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : rev[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
  }
  HeightLabeling lab;
  lab.h.assign(n, 0);
  for (int v = 0; v < n; ++v) lab.h[v] = dist[v] < 0 ? n : std::min(dist[v], n);
  lab.h[net.source()] = n;
  lab.h[net.sink()] = 0;
  return lab;
}

bool labeling_valid(const FlowNetwork& net, const FlowState& f,
                    const HeightLabeling& lab) {
  const int n = net.num_vertices();
  if (static_cast<int>(lab.h.size()) != n) return false;
  if (lab.h[net.source()] != n || lab.h[net.sink()] != 0) return false;
  for (int v = 0; v < n; ++v)
    if (lab.h[v] < 0 || lab.h[v] > n) return false;
  for (int a = 0; a < net.num_arcs(); ++a) {
    const FlowArc& arc = net.arc(a);
    if (arc.from == arc.to) continue;
    if (f.flow(a) < arc.capacity && lab.h[arc.from] > lab.h[arc.to] + 1)
      return false;
    if (f.flow(a) > 0 && lab.h[arc.to] > lab.h[arc.from] + 1) return false;
  }
  return true;
}

int relabel_value(const FlowNetwork& net, const FlowState& f,
                  const HeightLabeling& lab, int u) {
  const int n = net.num_vertices();
  int best = n;
  for (int a = 0; a < net.num_arcs(); ++a) {
    const FlowArc& arc = net.arc(a);
    if (arc.from == arc.to) continue;
    if (arc.from == u && f.flow(a) < arc.capacity)
      best = std::min(best, lab.h[arc.to] + 1);
    if (arc.to == u && f.flow(a) > 0) best = std::min(best, lab.h[arc.from] + 1);
  }
  return std::min(best, n);
}

namespace {

struct HlSolver {
  const FlowNetwork& net;
  const HlOptions& opts;
  int n, m, s, t;
  std::vector<Value> flow;
  std::vector<Value> excess;
  std::vector<int> h;
  // Residual arc ids per tail vertex (id a forward, a+m backward).
  std::vector<std::vector<int>> out;
  std::vector<std::set<int>> bucket;  // active vertices per height < n
  int highest = -1;
  OpCounters counters;

  HlSolver(const FlowNetwork& net, const HlOptions& opts)
      : net(net),
        opts(opts),
        n(net.num_vertices()),
        m(net.num_arcs()),
        s(net.source()),
        t(net.sink()),
        flow(net.num_arcs(), 0),
        excess(net.num_vertices(), 0),
        h(net.num_vertices(), 0),
        out(net.num_vertices()),
        bucket(std::max(net.num_vertices(), 1)) {
    for (int a = 0; a < m; ++a) {
      const FlowArc& arc = net.arc(a);
      if (arc.from == arc.to) continue;
      out[arc.from].push_back(a);
      out[arc.to].push_back(a + m);
    }
  }

  int tail(int rid) const { return rid < m ? net.arc(rid).from : net.arc(rid - m).to; }
  int head(int rid) const { return rid < m ? net.arc(rid).to : net.arc(rid - m).from; }
  Value residual(int rid) const {
    return rid < m ? net.arc(rid).capacity - flow[rid] : flow[rid - m];
  }
  void push_along(int rid, Value delta) {
    if (rid < m)
      flow[rid] += delta;
    else
      flow[rid - m] -= delta;
  }

  void recompute_excess() {
    std::fill(excess.begin(), excess.end(), 0);
    for (int a = 0; a < m; ++a) {
      excess[net.arc(a).to] += flow[a];
      excess[net.arc(a).from] -= flow[a];
    }
  }

  void activate(int v) {
    if (v == s || v == t || excess[v] <= 0 || h[v] >= n) return;
    bucket[h[v]].insert(v);
    highest = std::max(highest, h[v]);
  }

  void paranoid_validate() const {
    if (!opts.paranoid_checks) return;
    FlowState state(net, flow);
    if (!state.is_preflow())
      throw InvariantViolationError("preflow invariant broken mid-solve");
    HeightLabeling lab{h};
    if (!labeling_valid(net, state, lab))
      throw InvariantViolationError("labeling invariant broken mid-solve");
  }

  void stage_one() {
    for (int v = 0; v < n; ++v) activate(v);
    while (highest >= 0) {
      if (bucket[highest].empty()) {
        --highest;
        continue;
      }
      int u = *bucket[highest].begin();

      int admissible = -1;
      for (int rid : out[u])
        if (residual(rid) > 0 && h[u] == h[head(rid)] + 1) {
          admissible = rid;
          break;
        }

      if (admissible >= 0) {
        Value r = residual(admissible);
        Value delta = std::min(excess[u], r);
        bool saturating = delta == r;
        push_along(admissible, delta);
        int v = head(admissible);
        excess[u] -= delta;
        excess[v] += delta;
        if (saturating)
          ++counters.saturating_pushes;
        else
          ++counters.nonsaturating_pushes;
        if (excess[u] == 0) bucket[h[u]].erase(u);
        activate(v);
        paranoid_validate();
      } else {
        int nh = n;
        for (int rid : out[u])
          if (residual(rid) > 0) nh = std::min(nh, h[head(rid)] + 1);
        assert(nh > h[u] && "relabel must strictly raise the height");
        bucket[h[u]].erase(u);
        h[u] = nh;
        ++counters.relabels;
        if (nh < n) {
          bucket[nh].insert(u);
          highest = std::max(highest, nh);
        }
        paranoid_validate();
      }
    }
  }

  std::vector<char> cut_side() const {
    // Vertices that cannot reach t in the residual graph form the s-side;
    // every height-n vertex is among them.
    std::vector<std::vector<int>> rev(n);
    for (int a = 0; a < m; ++a) {
      const FlowArc& arc = net.arc(a);
      if (arc.from == arc.to) continue;
      if (flow[a] < arc.capacity) rev[arc.to].push_back(arc.from);
      if (flow[a] > 0) rev[arc.from].push_back(arc.to);
    }
    std::vector<char> reaches_t(n, 0);
    std::deque<int> q{t};
    reaches_t[t] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : rev[v])
        if (!reaches_t[u]) {
          reaches_t[u] = 1;
          q.push_back(u);
        }
    }
    std::vector<char> side(n, 0);
    for (int v = 0; v < n; ++v) side[v] = !reaches_t[v];
#ifndef NDEBUG
    for (int v = 0; v < n; ++v)
      if (h[v] >= n) assert(side[v]);
    assert(side[s]);
#endif
    return side;
  }

  void stage_two() {
    cancel_support_cycles(net, flow);
    recompute_excess();
    std::vector<std::vector<int>> in_arcs(n);
    for (int a = 0; a < m; ++a)
      if (flow[a] > 0) in_arcs[net.arc(a).to].push_back(a);

    std::vector<int> order = support_topo_order(net, flow);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      if (v == s || v == t || excess[v] <= 0) continue;
      for (int a : in_arcs[v]) {
        if (excess[v] == 0) break;
        Value cut = std::min(excess[v], flow[a]);
        flow[a] -= cut;
        excess[v] -= cut;
        excess[net.arc(a).from] += cut;
      }
      assert(excess[v] == 0 && "inflow always covers the stranded excess");
    }
  }

  HlResult run(std::vector<Value> initial_flow, std::vector<int> initial_h) {
    flow = std::move(initial_flow);
    h = std::move(initial_h);
    recompute_excess();
    HlResult res{FlowState(net), 0, {}, {}, HeightLabeling{h}};

    stage_one();
    res.source_side = cut_side();
    Value stage_one_value = excess[t];

    stage_two();
    assert(excess[t] == stage_one_value && "stage two must not change the value");
    res.flow = FlowState(net, flow);
    res.value = stage_one_value;
    res.counters = counters;
    assert(res.flow.is_feasible_flow());
    return res;
  }
};

std::vector<Value> cold_start_flow(const FlowNetwork& net) {
  std::vector<Value> f(net.num_arcs(), 0);
  for (int a = 0; a < net.num_arcs(); ++a)
    if (net.arc(a).from == net.source() && net.arc(a).to != net.source())
      f[a] = net.arc(a).capacity;
  return f;
}

}  // namespace

HlResult hl_push_relabel(const FlowNetwork& net, const HlOptions& opts) {
  HlSolver solver(net, opts);
  std::vector<int> h(net.num_vertices(), 0);
  h[net.source()] = net.num_vertices();
  return solver.run(cold_start_flow(net), std::move(h));
}

HlResult hl_push_relabel(const FlowNetwork& net, const PreflowPrediction& pred,
                         const HlOptions& opts) {
  FlowState fixed = fix_preflow(net, pred);
  HeightLabeling lab = shortest_path_labeling(net, fixed);
  assert(labeling_valid(net, fixed, lab));
  HlSolver solver(net, opts);
  return solver.run(fixed.values(), lab.h);
}

HlResult hl_push_relabel(const FlowNetwork& net, const FlowState& warm_flow,
                         const HeightLabeling& warm_labels,
                         const HlOptions& opts) {
  if (static_cast<int>(warm_flow.values().size()) != net.num_arcs())
    throw DimensionMismatchError("warm flow size must equal arc count");
  if (!warm_flow.is_preflow())
    throw InvalidInstanceError("warm flow is not a valid preflow");
  if (!labeling_valid(net, warm_flow, warm_labels))
    throw InvalidWarmLabelingError("warm labeling fails the validity check");
  HlSolver solver(net, opts);
  return solver.run(warm_flow.values(), warm_labels.h);
}

}  // namespace warmstart
