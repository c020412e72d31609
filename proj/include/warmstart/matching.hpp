#ifndef WARMSTART_MATCHING_HPP
#define WARMSTART_MATCHING_HPP

#include <optional>
#include <vector>

#include "warmstart/graph.hpp"
#include "warmstart/types.hpp"

// Exact minimum-weight perfect matching and perfect b-matching, warm-started
// from predicted duals. The solver keeps a flow representation with reduced
// costs c'_e = c_e + z_i - z_j (z_i = -y_i on the left, z_j = +y_j on the
// right); every residual arc keeps non-negative reduced cost throughout, so
// the per-round shortest paths run on Dijkstra.

namespace warmstart {

struct MatchingResult {
  // Edge ids carrying one or more units; multiplicity is per edge id (always
  // 0/1 for perfect matching, up to min(b_i,b_j) for b-matching).
  std::vector<int> matched_edges;
  std::vector<Value> edge_multiplicity;
  Value total_cost = 0;
  DualVector final_duals;  // flattened: left 0..nL-1, right nL..nL+nR-1
  OpCounters counters;
};

// First violated edge id, or nullopt when y_i + y_j <= c_ij holds everywhere.
std::optional<int> matching_violation(const BipartiteInstance& inst,
                                      const DualVector& y);
bool matching_feasible(const BipartiteInstance& inst, const DualVector& y);

// Repairs an arbitrary predicted dual to feasibility: right duals are kept,
// each left dual is clipped to min(yhat_i, min_j (c_ij - yhat_j)); isolated
// left vertices keep their prediction. Feasible inputs pass through
// unchanged.
DualVector repair_matching_duals(const BipartiteInstance& inst,
                                 const DualVector& predicted);

// Minimum-weight perfect matching from a feasible dual (checked). Requires
// n_left == n_right. Populates counters.first_match_size (tight-subgraph
// matching), while_iterations, dijkstra_calls and ff_augmentations.
MatchingResult solve_mwpm(const BipartiteInstance& inst,
                          const DualVector& feasible_dual);

// Minimum-weight perfect b-matching from a feasible dual. Each vertex v is
// matched exactly demand(v) times; edges may carry multiple units.
MatchingResult solve_mwbm(const BipartiteInstance& inst,
                          const DualVector& feasible_dual);

// An optimal dual: run the perfect-matching solver from the zero dual and
// read the final potentials. Every matched edge is tight under the result.
DualVector optimal_matching_dual(const BipartiteInstance& inst);

}  // namespace warmstart

#endif  // WARMSTART_MATCHING_HPP
