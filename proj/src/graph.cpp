#include "warmstart/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

namespace warmstart {

namespace {

void check_count(int n, const char* what) {
  if (n < 0) throw InvalidInstanceError(std::string(what) + " must be >= 0");
}

void check_magnitude(Value v, const char* what) {
  if (v > kMaxInputMagnitude || v < -kMaxInputMagnitude)
    throw InvalidInstanceError(std::string(what) + " exceeds the 2^31 input bound");
}

}  // namespace

static void validate_bipartite_structure(int n_left, int n_right,
                                         const std::vector<BipartiteEdge>& edges,
                                         const std::vector<Value>& demands) {
  check_count(n_left, "n_left");
  check_count(n_right, "n_right");
  for (const BipartiteEdge& e : edges) {
    if (e.left < 0 || e.left >= n_left || e.right < 0 || e.right >= n_right)
      throw InvalidInstanceError("edge endpoint out of range");
    if (e.cost < 0) throw InvalidInstanceError("edge cost must be non-negative");
  }
  if (!demands.empty()) {
    if (static_cast<int>(demands.size()) != n_left + n_right)
      throw InvalidInstanceError("demand vector size must be n_left + n_right");
    for (Value b : demands)
      if (b <= 0) throw InvalidInstanceError("demands must be positive");
  }
}

BipartiteInstance::BipartiteInstance(int n_left, int n_right,
                                     std::vector<BipartiteEdge> edges,
                                     std::vector<Value> demands) {
  validate_bipartite_structure(n_left, n_right, edges, demands);
  for (const BipartiteEdge& e : edges) check_magnitude(e.cost, "edge cost");
  if (demands.empty()) {
    std::set<std::pair<int, int>> seen;
    for (const BipartiteEdge& e : edges)
      if (!seen.insert({e.left, e.right}).second)
        throw InvalidInstanceError("parallel edges require a demand vector");
  }
  n_left_ = n_left;
  n_right_ = n_right;
  edges_ = std::move(edges);
  demands_ = std::move(demands);
}

BipartiteInstance BipartiteInstance::unchecked(int n_left, int n_right,
                                               std::vector<BipartiteEdge> edges,
                                               std::vector<Value> demands) {
  validate_bipartite_structure(n_left, n_right, edges, demands);
  BipartiteInstance inst;
  inst.n_left_ = n_left;
  inst.n_right_ = n_right;
  inst.edges_ = std::move(edges);
  inst.demands_ = std::move(demands);
  return inst;
}

static void validate_length_structure(int n, const std::vector<LengthArc>& arcs) {
  check_count(n, "vertex count");
  for (const LengthArc& a : arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw InvalidInstanceError("arc endpoint out of range");
    if (a.from == a.to) throw InvalidInstanceError("self-loops are not allowed");
  }
}

DirectedLengthGraph::DirectedLengthGraph(int n, std::vector<LengthArc> arcs) {
  validate_length_structure(n, arcs);
  for (const LengthArc& a : arcs) check_magnitude(a.length, "arc length");
  n_ = n;
  arcs_ = std::move(arcs);
}

DirectedLengthGraph DirectedLengthGraph::unchecked(int n, std::vector<LengthArc> arcs) {
  validate_length_structure(n, arcs);
  DirectedLengthGraph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);
  return g;
}

FlowNetwork::FlowNetwork(int n, std::vector<FlowArc> arcs, int source, int sink)
    : n_(n), arcs_(std::move(arcs)), source_(source), sink_(sink) {
  check_count(n, "vertex count");
  if (source < 0 || source >= n || sink < 0 || sink >= n)
    throw InvalidInstanceError("source/sink out of range");
  if (source == sink) throw InvalidInstanceError("source and sink must differ");
  for (const FlowArc& a : arcs_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw InvalidInstanceError("arc endpoint out of range");
    if (a.capacity < 0) throw InvalidInstanceError("capacities must be non-negative");
    check_magnitude(a.capacity, "arc capacity");
    check_magnitude(a.cost, "arc cost");
  }
}

FlowState::FlowState(const FlowNetwork& net)
    : net_(&net), flow_(net.num_arcs(), 0) {}

FlowState::FlowState(const FlowNetwork& net, std::vector<Value> flow)
    : net_(&net), flow_(std::move(flow)) {
  if (static_cast<int>(flow_.size()) != net.num_arcs())
    throw DimensionMismatchError("flow vector size must equal arc count");
}

Value FlowState::excess(int v) const {
  Value ex = 0;
  for (int a = 0; a < net_->num_arcs(); ++a) {
    const FlowArc& arc = net_->arc(a);
    if (arc.to == v) ex += flow_[a];
    if (arc.from == v) ex -= flow_[a];
  }
  return ex;
}

std::vector<Value> FlowState::excess_vector() const {
  std::vector<Value> ex(net_->num_vertices(), 0);
  for (int a = 0; a < net_->num_arcs(); ++a) {
    const FlowArc& arc = net_->arc(a);
    ex[arc.to] += flow_[a];
    ex[arc.from] -= flow_[a];
  }
  return ex;
}

bool FlowState::respects_capacities() const {
  for (int a = 0; a < net_->num_arcs(); ++a)
    if (flow_[a] < 0 || flow_[a] > net_->arc(a).capacity) return false;
  return true;
}

bool FlowState::is_preflow() const {
  if (!respects_capacities()) return false;
  std::vector<Value> ex = excess_vector();
  for (int v = 0; v < net_->num_vertices(); ++v)
    if (v != net_->source() && v != net_->sink() && ex[v] < 0) return false;
  return true;
}

bool FlowState::is_feasible_flow() const {
  if (!respects_capacities()) return false;
  std::vector<Value> ex = excess_vector();
  for (int v = 0; v < net_->num_vertices(); ++v)
    if (v != net_->source() && v != net_->sink() && ex[v] != 0) return false;
  return true;
}

ResidualNetwork::ResidualNetwork(const FlowNetwork& net)
    : ResidualNetwork(net, std::vector<Value>(net.num_arcs(), 0)) {}

ResidualNetwork::ResidualNetwork(const FlowNetwork& net, std::vector<Value> flow)
    : net_(&net), flow_(std::move(flow)), out_(net.num_vertices()) {
  if (static_cast<int>(flow_.size()) != net.num_arcs())
    throw DimensionMismatchError("flow vector size must equal arc count");
  const int m = net.num_arcs();
  for (int a = 0; a < m; ++a) {
    const FlowArc& arc = net.arc(a);
    if (arc.from == arc.to) continue;  // self-loops never carry useful flow
    out_[arc.from].push_back(a);
    out_[arc.to].push_back(a + m);
  }
}

int ResidualNetwork::tail(int rid) const {
  const int m = net_->num_arcs();
  return rid < m ? net_->arc(rid).from : net_->arc(rid - m).to;
}

int ResidualNetwork::head(int rid) const {
  const int m = net_->num_arcs();
  return rid < m ? net_->arc(rid).to : net_->arc(rid - m).from;
}

Value ResidualNetwork::residual(int rid) const {
  const int m = net_->num_arcs();
  return rid < m ? net_->arc(rid).capacity - flow_[rid] : flow_[rid - m];
}

void ResidualNetwork::augment(int rid, Value delta) {
  const int m = net_->num_arcs();
  if (rid < m)
    flow_[rid] += delta;
  else
    flow_[rid - m] -= delta;
}

}  // namespace warmstart
