#ifndef WARMSTART_PUSHRELABEL_HPP
#define WARMSTART_PUSHRELABEL_HPP

#include <vector>

#include "warmstart/graph.hpp"
#include "warmstart/types.hpp"

// Two-stage highest-label push-relabel with learned-preflow warm starts.
// Stage one runs push/relabel with heights capped at n until no vertex is
// active; stage two returns stranded excess to the source along the acyclic
// flow support, restoring conservation without changing the flow value.

namespace warmstart {

struct HeightLabeling {
  std::vector<int> h;  // h[v] in [0, n]; h[s] = n, h[t] = 0
};

// Raw predicted per-arc flow, aligned with the network's arc ids. May violate
// the current capacities; only non-negativity is required of the input.
struct PreflowPrediction {
  std::vector<Value> flow;
};

// Cancels cycles in the flow support (repeated DFS, smallest flow on the
// cycle removed). Excesses and net flow across every cut are unchanged.
FlowState make_acyclic(const FlowNetwork& net, FlowState flow);

// Turns a raw prediction into a valid preflow: flow into the source and out
// of the sink is dropped, the support is made acyclic, one topological sweep
// caps capacities and restores weak conservation, and the source's out-arcs
// are resaturated.
FlowState fix_preflow(const FlowNetwork& net, const PreflowPrediction& pred);

// h_v = min(n, residual distance from v to t); h_s = n.
HeightLabeling shortest_path_labeling(const FlowNetwork& net, const FlowState& f);

// Validity: h_s = n, h_t = 0, 0 <= h <= n, and h_u <= h_v + 1 on every
// residual arc (u,v).
bool labeling_valid(const FlowNetwork& net, const FlowState& f,
                    const HeightLabeling& h);

// min(n, 1 + min height over residual out-arcs of u); n when u has none.
int relabel_value(const FlowNetwork& net, const FlowState& f,
                  const HeightLabeling& h, int u);

struct HlOptions {
  // Re-validate the preflow after every push and the labeling after every
  // relabel. Quadratic; only sensible on small instances under test.
  bool paranoid_checks = false;
};

struct HlResult {
  FlowState flow;
  Value value = 0;
  // Min cut: vertices that cannot reach t in the stage-one residual graph.
  std::vector<char> source_side;
  OpCounters counters;
  // Heights at stage-one start (warm-start bound bookkeeping).
  HeightLabeling initial_labels;
};

// Cold start: saturate the source's out-arcs, all heights zero except h_s=n.
HlResult hl_push_relabel(const FlowNetwork& net, const HlOptions& opts = {});

// Warm start from a raw prediction: make_acyclic -> fix_preflow ->
// shortest_path_labeling, then the standard two stages.
HlResult hl_push_relabel(const FlowNetwork& net, const PreflowPrediction& pred,
                         const HlOptions& opts = {});

// Warm start from an explicit (preflow, labeling) pair; both are validated.
HlResult hl_push_relabel(const FlowNetwork& net, const FlowState& warm_flow,
                         const HeightLabeling& warm_labels,
                         const HlOptions& opts = {});

}  // namespace warmstart

#endif  // WARMSTART_PUSHRELABEL_HPP
