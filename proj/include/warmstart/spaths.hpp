#ifndef WARMSTART_SPATHS_HPP
#define WARMSTART_SPATHS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "warmstart/graph.hpp"
#include "warmstart/types.hpp"

// Reduced-edge-length duals: y is feasible for (G, l) when
// l_y(u,v) = l(u,v) + y_u - y_v >= 0 on every arc. Feasible duals turn
// negative-length shortest paths into Dijkstra runs; the rounding scheme
// repairs an arbitrary prediction into a feasible dual.

namespace warmstart {

// First violated arc id, or nullopt when y is feasible everywhere.
std::optional<int> re_violation(const DirectedLengthGraph& g, const DualVector& y);
bool re_feasible(const DirectedLengthGraph& g, const DualVector& y);

struct RoundResult {
  DualVector dual;
  OpCounters counters;
};

// Observer invoked once per rounding iteration, after the dual update.
struct RoundIteration {
  std::uint64_t iteration;   // 1-based
  const DualVector& duals;   // state after the update
  int max_layer;             // deepest nonempty layer this iteration
  int chosen_layer;          // the layer whose tail was lowered
};
using RoundObserver = std::function<void(const RoundIteration&)>;

// Rounds a predicted dual to feasibility by repeatedly contracting the
// non-positive subgraph, layering it by depth from a virtual root, and
// lowering the deepest popular tail by one. Arcs that are non-negative stay
// non-negative at every step. Raises NegativeCycleError when the graph has a
// negative cycle (certified lazily: one Bellman-Ford run is triggered if the
// loop outlives n+1 iterations, after which an exact iteration cap is armed).
RoundResult round_re_duals(const DirectedLengthGraph& g, DualVector predicted,
                           const RoundObserver& observer = {});

// Dijkstra under a feasible dual; distances are un-telescoped back to true
// lengths. Raises InfeasibleDualError when y is not feasible.
std::vector<Dist> sssp_with_dual(const DirectedLengthGraph& g, int source,
                                 const DualVector& y);

struct ApspResult {
  std::vector<std::vector<Dist>> dist;  // dist[u][v]
  OpCounters counters;
};

// Negative-cycle check up front, then round the prediction and run Dijkstra
// from every vertex.
ApspResult apsp_with_prediction(const DirectedLengthGraph& g,
                                const DualVector& predicted);

// Max over the all-pairs table; requires all ordered pairs reachable.
Value diameter_with_prediction(const DirectedLengthGraph& g,
                               const DualVector& predicted);

}  // namespace warmstart

#endif  // WARMSTART_SPATHS_HPP
