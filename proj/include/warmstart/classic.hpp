#ifndef WARMSTART_CLASSIC_HPP
#define WARMSTART_CLASSIC_HPP

#include <optional>
#include <vector>

#include "warmstart/graph.hpp"
#include "warmstart/types.hpp"

// Classical subroutines the warm-started solvers compose: Dijkstra over
// non-negative (reduced) lengths, Bellman-Ford with negative-cycle witness,
// Hopcroft-Karp, Ford-Fulkerson augmentation, and the Edmonds-Karp oracle.

namespace warmstart {

struct ShortestPathTree {
  std::vector<Dist> dist;
  // Arc id used to reach each vertex, -1 for the source and unreached ones.
  std::vector<int> parent_arc;
};

// Dijkstra over arc lengths that are already non-negative (typically reduced
// costs). A negative length signals a solver bug upstream and raises
// InvariantViolationError. Ties are broken toward the lowest vertex id.
ShortestPathTree dijkstra(const DirectedLengthGraph& g, int source);

struct NegativeCycleWitness {
  std::vector<int> arc_ids;  // arcs of the cycle, in order
  Value total = 0;           // < 0
};

struct BellmanFordResult {
  // Engaged when a negative cycle was found; dist/dual are then meaningless.
  std::optional<NegativeCycleWitness> negative_cycle;
  std::vector<Dist> dist;
  // dual[v] = dist[v] where reached (0 elsewhere); feasible on every arc with
  // both endpoints reached.
  DualVector dual;
  std::uint64_t passes = 0;
};

BellmanFordResult bellman_ford(const DirectedLengthGraph& g, int source);

// Bellman-Ford from a virtual super-source with zero-length arcs to every
// vertex. On success the dual is feasible on ALL arcs; otherwise a negative
// cycle witness is returned. This is the fallback dual y_bf the rounding
// scheme measures itself against.
BellmanFordResult bellman_ford_all(const DirectedLengthGraph& g);

// Maximum-cardinality bipartite matching. adj[i] lists right neighbours of
// left vertex i. Returns match_of_left (right id or -1), deterministic for a
// fixed adjacency order.
std::vector<int> hopcroft_karp(int n_left, int n_right,
                               const std::vector<std::vector<int>>& adj);

// DFS augmentation on a residual network, restricted to residual arcs allowed
// by `mask` (size 2m; nullptr = all) and stopping after `flow_cap` added units
// (negative = unlimited). One ff_augmentation is counted per augmenting path;
// on unit-capacity networks that is one per unit of flow.
Value ford_fulkerson(ResidualNetwork& rn, int s, int t, Value flow_cap = -1,
                     const std::vector<char>* mask = nullptr,
                     OpCounters* counters = nullptr);

struct MaxFlowResult {
  Value value = 0;
  FlowState flow;
  // Min-cut: side[v] != 0 iff v is on the source side.
  std::vector<char> source_side;
};

// Verification oracle (tests and the verify CLI path); BFS augmenting paths.
MaxFlowResult edmonds_karp(const FlowNetwork& net);

}  // namespace warmstart

#endif  // WARMSTART_CLASSIC_HPP
