#include "warmstart/predict.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "warmstart/classic.hpp"

namespace warmstart {

DualVector batch_median_predictor(const std::vector<DualVector>& training) {
  if (training.empty())
    throw EmptyTrainingSetError("batch predictor needs at least one sample");
  const std::size_t dim = training.front().size();
  for (const DualVector& s : training)
    if (s.size() != dim)
      throw DimensionMismatchError("training duals differ in dimension");

  DualVector median(dim, 0);
  std::vector<Value> column(training.size());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < training.size(); ++k) column[k] = training[k][i];
    std::sort(column.begin(), column.end());
    median[i] = column[(column.size() - 1) / 2];  // lower median stays integral
  }
  return median;
}

ErrorReport measure_error(const DualVector& predicted, const DualVector& optimal,
                          const std::vector<Value>* demands) {
  if (predicted.size() != optimal.size())
    throw DimensionMismatchError("error vectors differ in dimension");
  if (demands && demands->size() != predicted.size())
    throw DimensionMismatchError("demand vector differs in dimension");
  ErrorReport rep;
  if (demands) {
    rep.l_b0 = 0;
    rep.l_b1 = 0;
  }
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    Value d = predicted[i] - optimal[i];
    if (d < 0) d = -d;
    rep.l0 += d != 0;
    rep.l1 += d;
    rep.linf = std::max(rep.linf, d);
    if (demands) {
      *rep.l_b0 += (*demands)[i] * (d != 0);
      *rep.l_b1 += (*demands)[i] * d;
    }
  }
  return rep;
}

namespace {

Value walk_step(SplitMix64& rng, Value sigma) {
  return sigma == 0 ? 0 : rng.range(-sigma, sigma);
}

std::vector<BipartiteInstance> gen_matching_steps(int n, int steps, Value sigma,
                                                  SplitMix64& rng) {
  // Complete bipartite costs in [0,20] at step 1, then a clamped walk.
  std::vector<Value> costs(static_cast<std::size_t>(n) * n);
  for (Value& c : costs) c = rng.range(0, 20);
  std::vector<BipartiteInstance> out;
  out.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    if (t > 0)
      for (Value& c : costs) c = std::max<Value>(0, c + walk_step(rng, sigma));
    std::vector<BipartiteEdge> edges;
    edges.reserve(costs.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) edges.push_back({i, j, costs[i * n + j]});
    out.push_back(BipartiteInstance(n, n, std::move(edges)));
  }
  return out;
}

std::vector<DirectedLengthGraph> gen_sp_steps(int n, int steps, Value sigma,
                                              SplitMix64& rng) {
  const int kRetries = 100;
  // Arc skeleton: a ring for reachability plus n random chords.
  std::vector<std::pair<int, int>> skeleton;
  for (int v = 0; v < n; ++v) skeleton.push_back({v, (v + 1) % n});
  for (int k = 0; k < n; ++k) {
    int u = static_cast<int>(rng.range(0, n - 1));
    int v = static_cast<int>(rng.range(0, n - 2));
    if (v >= u) ++v;
    skeleton.push_back({u, v});
  }

  auto draw_lengths = [&](std::vector<Value>& len, bool fresh) {
    for (std::size_t a = 0; a < skeleton.size(); ++a)
      len[a] = fresh ? rng.range(-5, 10)
                     : std::clamp<Value>(len[a] + walk_step(rng, sigma), -5, 10);
  };
  auto build = [&](const std::vector<Value>& len) {
    std::vector<LengthArc> arcs;
    for (std::size_t a = 0; a < skeleton.size(); ++a)
      arcs.push_back({skeleton[a].first, skeleton[a].second, len[a]});
    return DirectedLengthGraph(n, std::move(arcs));
  };
  auto has_negative_cycle = [&](const std::vector<Value>& len) {
    return bellman_ford_all(build(len)).negative_cycle.has_value();
  };

  std::vector<Value> lengths(skeleton.size(), 0);
  std::vector<DirectedLengthGraph> out;
  out.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    std::vector<Value> candidate = lengths;
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt >= kRetries)
        throw GenerationFailedError("could not draw a negative-cycle-free step");
      draw_lengths(candidate, t == 0);
      if (!has_negative_cycle(candidate)) break;
      candidate = lengths;
    }
    lengths = candidate;
    out.push_back(build(lengths));
  }
  return out;
}

std::vector<FlowNetwork> gen_flow_steps(int n, int steps, Value sigma,
                                        SplitMix64& rng) {
  // Path s=0 -> ... -> t=n-1 for connectivity, plus 2n random arcs.
  std::vector<std::pair<int, int>> skeleton;
  for (int v = 0; v + 1 < n; ++v) skeleton.push_back({v, v + 1});
  for (int k = 0; k < 2 * n; ++k) {
    int u = static_cast<int>(rng.range(0, n - 1));
    int v = static_cast<int>(rng.range(0, n - 2));
    if (v >= u) ++v;
    skeleton.push_back({u, v});
  }
  std::vector<Value> caps(skeleton.size());
  for (Value& c : caps) c = rng.range(0, 20);

  std::vector<FlowNetwork> out;
  out.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    if (t > 0)
      for (Value& c : caps) c = std::max<Value>(0, c + walk_step(rng, sigma));
    std::vector<FlowArc> arcs;
    for (std::size_t a = 0; a < skeleton.size(); ++a)
      arcs.push_back({skeleton[a].first, skeleton[a].second, caps[a], 0});
    out.push_back(FlowNetwork(n, std::move(arcs), 0, n - 1));
  }
  return out;
}

}  // namespace

InstanceFamily gen_drift_family(FamilyKind kind, int n, int steps, Value sigma,
                                std::uint64_t seed) {
  if (n < 2 || steps < 1 || sigma < 0)
    throw InvalidParamsError("family needs n >= 2, steps >= 1, sigma >= 0");
  InstanceFamily fam;
  fam.kind = kind;
  fam.n = n;
  fam.steps = steps;
  fam.sigma = sigma;
  fam.seed = seed;
  SplitMix64 rng(seed);
  switch (kind) {
    case FamilyKind::matching:
      fam.matching_steps = gen_matching_steps(n, steps, sigma, rng);
      break;
    case FamilyKind::sp:
      fam.sp_steps = gen_sp_steps(n, steps, sigma, rng);
      break;
    case FamilyKind::flow:
      fam.flow_steps = gen_flow_steps(n, steps, sigma, rng);
      break;
  }
  return fam;
}

std::uint64_t sample_complexity_estimate(int d, Value M, double eps, double delta) {
  if (d < 1 || M < 0 || !(eps > 0) || !(delta > 0) || !(delta < 1))
    throw InvalidParamsError("need d >= 1, M >= 0, eps > 0, 0 < delta < 1");
  double ratio = static_cast<double>(d) * static_cast<double>(M) / eps;
  double bound = ratio * ratio *
                 (static_cast<double>(d) * std::log(static_cast<double>(d)) +
                  std::log(1.0 / delta));
  return static_cast<std::uint64_t>(std::ceil(bound));
}

}  // namespace warmstart
