#ifndef WARMSTART_PREDICT_HPP
#define WARMSTART_PREDICT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "warmstart/graph.hpp"
#include "warmstart/types.hpp"

// Predictor synthesis and error metrics, plus a seeded drifting-instance
// generator: a family shares its vertex set while weights follow a bounded
// random walk, emulating monthly re-solves of a slowly changing problem.

namespace warmstart {

// Deterministic 64-bit generator (SplitMix constants; same stream on every
// platform, so generated families are reproducible across implementations).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [lo, hi]; span is tiny relative to 2^64, so the
  // modulo bias is irrelevant here.
  Value range(Value lo, Value hi) {
    return lo + static_cast<Value>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Coordinate-wise lower median; exactly minimizes the empirical l1 sum over
// integer hints.
DualVector batch_median_predictor(const std::vector<DualVector>& training);

// Passes through the previously observed optimal dual; zeros before any
// observation.
class OnlinePredictor {
 public:
  DualVector predict(std::size_t dim) const {
    return last_ ? *last_ : DualVector(dim, 0);
  }
  void observe(DualVector optimal) { last_ = std::move(optimal); }
  bool has_observation() const { return last_.has_value(); }

 private:
  std::optional<DualVector> last_;
};

struct ErrorReport {
  Value l0 = 0;
  Value l1 = 0;
  Value linf = 0;
  // Demand-weighted variants, present when demands were supplied.
  std::optional<Value> l_b0;
  std::optional<Value> l_b1;
};

ErrorReport measure_error(const DualVector& predicted, const DualVector& optimal,
                          const std::vector<Value>* demands = nullptr);

enum class FamilyKind { matching, sp, flow };

struct InstanceFamily {
  FamilyKind kind = FamilyKind::matching;
  int n = 0;
  int steps = 0;
  Value sigma = 0;
  std::uint64_t seed = 0;
  // Exactly one of these is populated, with `steps` entries.
  std::vector<BipartiteInstance> matching_steps;
  std::vector<DirectedLengthGraph> sp_steps;
  std::vector<FlowNetwork> flow_steps;
};

// Deterministic for a seed. Step weights follow a per-edge bounded random
// walk of step size at most sigma, clamped to validity (costs/capacities
// stay non-negative; sp steps are re-drawn until they carry no negative
// cycle, failing after a bounded number of retries).
InstanceFamily gen_drift_family(FamilyKind kind, int n, int steps, Value sigma,
                                std::uint64_t seed);

// Sample count sufficient for l1-ERM at accuracy eps and confidence 1-delta:
// ceil((d*M/eps)^2 * (d*ln(d) + ln(1/delta))) with explicit constant 1.
// Order-of-magnitude guidance only; the hidden constants are unknown.
std::uint64_t sample_complexity_estimate(int d, Value M, double eps, double delta);

}  // namespace warmstart

#endif  // WARMSTART_PREDICT_HPP
