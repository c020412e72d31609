#ifndef WARMSTART_TYPES_HPP
#define WARMSTART_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace warmstart {

// All costs, lengths, capacities, flows and duals are 64-bit signed integers.
// Solver cores never touch floating point.
using Value = std::int64_t;

// Per-vertex dual / potential values (matching duals, reduced-edge-length
// duals, shortest-path potentials).
using DualVector = std::vector<Value>;

// A shortest-path distance. Disconnected vertices are reported as an empty
// optional, never as a large finite number.
using Dist = std::optional<Value>;

// Largest |cost| / |length| / capacity accepted from user input, so that
// n*C sums stay far below the int64 range.
inline constexpr Value kMaxInputMagnitude = Value{1} << 31;

// Instrumentation for one solve. Reset at solve start, monotone afterwards.
struct OpCounters {
  std::uint64_t while_iterations = 0;
  std::uint64_t dijkstra_calls = 0;
  std::uint64_t ff_augmentations = 0;
  std::uint64_t first_match_size = 0;
  std::uint64_t relabels = 0;
  std::uint64_t saturating_pushes = 0;
  std::uint64_t nonsaturating_pushes = 0;
  std::uint64_t bellman_ford_passes = 0;
  std::uint64_t round_iterations = 0;

  void reset() { *this = OpCounters{}; }
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance data (bad vertex ids, negative capacities, ...).
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// A supplied dual violates a feasibility constraint it was required to meet.
class InfeasibleDualError : public Error {
 public:
  using Error::Error;
};

class NoPerfectMatchingError : public Error {
 public:
  using Error::Error;
};

class NoPerfectBMatchingError : public Error {
 public:
  using Error::Error;
};

class NoCompleteDcsError : public Error {
 public:
  using Error::Error;
};

class InfeasibleBoundsError : public Error {
 public:
  using Error::Error;
};

class NoFlowOfValueError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

class InvalidWarmLabelingError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptyTrainingSetError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class GenerationFailedError : public Error {
 public:
  using Error::Error;
};

class OracleTooLargeError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal invariant breaks (a solver bug, never user input).
class InvariantViolationError : public Error {
 public:
  using Error::Error;
};

// Negative cycle reported where none is tolerated. Carries a witness: arc ids
// forming a cycle whose total length is negative (may be empty when the cycle
// was inferred from an iteration cap rather than constructed).
class NegativeCycleError : public Error {
 public:
  NegativeCycleError(std::vector<int> arc_ids, Value total)
      : Error("negative cycle of total length " + std::to_string(total)),
        arc_ids_(std::move(arc_ids)),
        total_(total) {}

  explicit NegativeCycleError(const std::string& what)
      : Error(what), total_(0) {}

  const std::vector<int>& arc_ids() const { return arc_ids_; }
  Value total_length() const { return total_; }

 private:
  std::vector<int> arc_ids_;
  Value total_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace warmstart

#endif  // WARMSTART_TYPES_HPP
