#ifndef WARMSTART_REDUCTIONS_HPP
#define WARMSTART_REDUCTIONS_HPP

#include <functional>
#include <vector>

#include "warmstart/graph.hpp"
#include "warmstart/types.hpp"

// Reductions onto minimum-weight perfect matching, each carrying provenance
// and a pull-back from target solutions to source solutions. Maximum-weight
// targets are solved by the min-cost solver after negating weights and adding
// a per-edge constant offset; perfect matchings have a fixed edge count, so
// the offset cancels in comparisons.

namespace warmstart {

// Predictor for the reduced matching instance (the pipeline repairs its
// output before solving).
using MatchingPredictor = std::function<DualVector(const BipartiteInstance&)>;

// ---------------------------------------------------------------------------
// Shortest paths (negative lengths allowed) -> perfect matching
// ---------------------------------------------------------------------------

struct SpMatchingReduction {
  // Min-cost form: edge e < m mirrors source arc e with cost offset+l(e);
  // edge m+u is the zero-weight (u_1,u_2) pair with cost offset.
  BipartiteInstance target;
  Value offset = 0;
  int source_arcs = 0;
  int source_vertices = 0;

  // Max-weight value of a target matching given its min-cost value.
  Value max_weight_of_cost(Value total_cost) const {
    return static_cast<Value>(source_vertices) * offset - total_cost;
  }

  // Feasible reduced-edge-length duals from an optimal target dual (valid
  // whenever the source has no negative cycle): pi_u = offset - y_{u_1}.
  DualVector pull_back_dual(const DualVector& target_dual) const;
};

SpMatchingReduction reduce_sp_to_matching(const DirectedLengthGraph& g);

// True iff the max-weight perfect matching of the reduced graph has positive
// weight, which happens exactly when g has a negative cycle.
bool detect_negative_cycle_via_matching(const DirectedLengthGraph& g);

// ---------------------------------------------------------------------------
// Degree-constrained subgraph (maximize weight, meet every upper bound
// exactly) -> perfect matching
// ---------------------------------------------------------------------------

struct DcsMatchingReduction {
  BipartiteInstance target;  // min-cost form (offset applied)
  Value offset = 0;
  // Per target edge: originating source edge id, or -1 for internal edges.
  std::vector<int> source_edge;

  // Source edge ids selected by a perfect matching of the target.
  std::vector<int> pull_back(const std::vector<int>& matched_target_edges) const;
};

// upper[v] indexed by flattened vertex id; requires 0 <= upper[v] <= deg(v).
DcsMatchingReduction reduce_dcs_to_matching(const BipartiteInstance& g,
                                            const std::vector<Value>& upper);

// ---------------------------------------------------------------------------
// Minimum-cost 0-1 flow of a given value -> DCS
// ---------------------------------------------------------------------------

struct Flow01DcsReduction {
  BipartiteInstance dcs_graph;  // bipartite multigraph, weight-shifted costs
  std::vector<Value> upper;     // DCS bounds, flattened
  // Per DCS edge: source arc id, or -1 for a vertex self-copy.
  std::vector<int> source_arc;
  Value flow_value = 0;

  FlowState pull_back(const std::vector<int>& chosen_dcs_edges,
                      const FlowNetwork& net) const;
};

Flow01DcsReduction reduce_01flow_to_dcs(const FlowNetwork& net, Value value);

// ---------------------------------------------------------------------------
// Reduce -> predict -> repair -> solve -> pull back pipelines; the inner
// solver's counters are surfaced unchanged.
// ---------------------------------------------------------------------------

struct SpPipelineResult {
  DualVector re_dual;            // feasible for the source graph
  std::vector<Dist> distances;   // from the requested source vertex
  OpCounters counters;
};

SpPipelineResult run_sp_pipeline(const DirectedLengthGraph& g, int source,
                                 const MatchingPredictor& predictor);

struct DcsPipelineResult {
  std::vector<int> chosen_edges;  // source edge ids
  Value total_weight = 0;
  OpCounters counters;
};

DcsPipelineResult run_dcs_pipeline(const BipartiteInstance& g,
                                   const std::vector<Value>& upper,
                                   const MatchingPredictor& predictor);

struct Flow01PipelineResult {
  FlowState flow;
  Value total_cost = 0;
  OpCounters counters;
};

Flow01PipelineResult run_01flow_pipeline(const FlowNetwork& net, Value value,
                                         const MatchingPredictor& predictor);

}  // namespace warmstart

#endif  // WARMSTART_REDUCTIONS_HPP
