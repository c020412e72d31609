#ifndef WARMSTART_GRAPH_HPP
#define WARMSTART_GRAPH_HPP

#include <vector>

#include "warmstart/types.hpp"

namespace warmstart {

// ---------------------------------------------------------------------------
// Bipartite instances
//
// Vertices are dense 0-based ids. In flattened form the left vertices are
// 0..n_left-1 and the right vertices n_left..n_left+n_right-1; duals and
// demands are indexed that way. Edges are primary-keyed by their id (input
// order), so parallel edges are first-class citizens.
// ---------------------------------------------------------------------------

struct BipartiteEdge {
  int left = 0;   // 0..n_left-1
  int right = 0;  // 0..n_right-1
  Value cost = 0;
};

class BipartiteInstance {
 public:
  // Validating constructor for user-supplied data. Parallel edges are only
  // accepted together with demands (multigraphs exist for b-matching / DCS).
  BipartiteInstance(int n_left, int n_right, std::vector<BipartiteEdge> edges,
                    std::vector<Value> demands = {});

  // Internal factory for solver-built instances (reduction targets): skips
  // the input magnitude cap and the simple-graph rule, keeps range checks.
  static BipartiteInstance unchecked(int n_left, int n_right,
                                     std::vector<BipartiteEdge> edges,
                                     std::vector<Value> demands = {});

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  int num_vertices() const { return n_left_ + n_right_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<BipartiteEdge>& edges() const { return edges_; }
  const BipartiteEdge& edge(int id) const { return edges_[id]; }

  bool has_demands() const { return !demands_.empty(); }
  // Demand of a flattened vertex id; 1 when no demand vector is present.
  Value demand(int v) const { return demands_.empty() ? 1 : demands_[v]; }
  const std::vector<Value>& demands() const { return demands_; }

  int left_id(int i) const { return i; }
  int right_id(int j) const { return n_left_ + j; }

 private:
  BipartiteInstance() = default;

  int n_left_ = 0;
  int n_right_ = 0;
  std::vector<BipartiteEdge> edges_;
  std::vector<Value> demands_;  // empty means all ones
};

// ---------------------------------------------------------------------------
// Directed graphs with signed arc lengths
// ---------------------------------------------------------------------------

struct LengthArc {
  int from = 0;
  int to = 0;
  Value length = 0;
};

class DirectedLengthGraph {
 public:
  DirectedLengthGraph(int n, std::vector<LengthArc> arcs);

  static DirectedLengthGraph unchecked(int n, std::vector<LengthArc> arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<LengthArc>& arcs() const { return arcs_; }
  const LengthArc& arc(int id) const { return arcs_[id]; }

 private:
  DirectedLengthGraph() = default;

  int n_ = 0;
  std::vector<LengthArc> arcs_;
};

// ---------------------------------------------------------------------------
// Capacitated flow networks and flow states
// ---------------------------------------------------------------------------

struct FlowArc {
  int from = 0;
  int to = 0;
  Value capacity = 0;
  Value cost = 0;  // optional, used by min-cost reductions only
};

class FlowNetwork {
 public:
  FlowNetwork(int n, std::vector<FlowArc> arcs, int source, int sink);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<FlowArc>& arcs() const { return arcs_; }
  const FlowArc& arc(int id) const { return arcs_[id]; }
  int source() const { return source_; }
  int sink() const { return sink_; }

 private:
  int n_ = 0;
  std::vector<FlowArc> arcs_;
  int source_ = 0;
  int sink_ = 0;
};

// Per-arc flow over a network. Excess(v) = inflow - outflow. A feasible flow
// has zero excess away from {s,t}; a preflow only needs non-negative excess
// there.
class FlowState {
 public:
  explicit FlowState(const FlowNetwork& net);
  FlowState(const FlowNetwork& net, std::vector<Value> flow);

  const FlowNetwork& network() const { return *net_; }
  const std::vector<Value>& values() const { return flow_; }
  Value flow(int arc_id) const { return flow_[arc_id]; }
  void set_flow(int arc_id, Value f) { flow_[arc_id] = f; }

  Value excess(int v) const;
  std::vector<Value> excess_vector() const;
  // Net flow into the sink.
  Value value() const { return excess(net_->sink()); }

  bool respects_capacities() const;
  bool is_preflow() const;
  bool is_feasible_flow() const;

 private:
  const FlowNetwork* net_;
  std::vector<Value> flow_;
};

// ---------------------------------------------------------------------------
// Residual view
//
// Residual arc ids: id a in [0,m) is the forward direction of arc a with
// capacity cap_a - f_a; id a+m is the reversal with capacity f_a. Self-loops
// are kept in the arc list but never appear in adjacency.
// ---------------------------------------------------------------------------

class ResidualNetwork {
 public:
  explicit ResidualNetwork(const FlowNetwork& net);
  ResidualNetwork(const FlowNetwork& net, std::vector<Value> flow);

  const FlowNetwork& network() const { return *net_; }
  int num_residual_arcs() const { return 2 * net_->num_arcs(); }

  int tail(int rid) const;
  int head(int rid) const;
  Value residual(int rid) const;
  // Moves delta units along the residual arc, adjusting the underlying flow.
  void augment(int rid, Value delta);

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<Value>& flow() const { return flow_; }
  FlowState state() const { return FlowState(*net_, flow_); }

 private:
  const FlowNetwork* net_;
  std::vector<Value> flow_;
  std::vector<std::vector<int>> out_;  // residual arc ids per tail vertex
};

}  // namespace warmstart

#endif  // WARMSTART_GRAPH_HPP
