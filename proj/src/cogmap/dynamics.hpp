#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cogmap/concepts.hpp"

namespace cogmap {

enum class PatternKind { FixedPoint, LimitCycle };

/// Terminal object of a cognitive run.  For a fixed point, states holds the
/// single terminal state; for a limit cycle it holds the repeating segment
/// in order.  trace records every visited state starting from the input.
struct HiddenPattern {
  PatternKind kind = PatternKind::FixedPoint;
  std::vector<std::vector<TriState>> states;
  std::vector<std::vector<TriState>> trace;
  std::size_t iterations = 0;

  const std::vector<TriState>& terminal() const { return states.front(); }
};

struct StatePair {
  std::vector<TriState> domain;
  std::vector<TriState> range;

  friend bool operator==(const StatePair&, const StatePair&) = default;
};

/// One emitted half-step of a bidirectional run.
struct SideStep {
  char side;  // 'D' or 'R'
  std::vector<TriState> states;
  std::vector<long> activations;  // raw products (BAM only; empty otherwise)
};

/// Terminal object of a relational or BAM run: a fixed binary pair or a
/// cycle of pairs, plus the pair trace and the half-step emission trace.
struct RelationalPattern {
  PatternKind kind = PatternKind::FixedPoint;
  std::vector<StatePair> states;
  std::vector<StatePair> trace;
  std::vector<SideStep> half_steps;
  std::size_t iterations = 0;

  const StatePair& terminal() const { return states.front(); }
};

struct BamConfig {
  std::vector<long> thresholds_u;  // per row-field neuron; empty = all zero
  std::vector<long> thresholds_v;  // per column-field neuron; empty = all zero
  enum class Mode { Binary, Bipolar } mode = Mode::Binary;
  std::vector<TriState> initial_y;  // unseeded-field override; empty = all OFF
};

inline constexpr std::size_t kDefaultMaxIters = 10000;

/// Collapse each accumulated coordinate, then force every clamp coordinate
/// back ON; the clamp set carries over unchanged.
StateVector threshold_update(std::span<const NeutroValue> raw, const StateVector& prev,
                             const ThresholdPolicy& p);

/// Iterate x(k+1) = threshold_update(x(k) . m, x(k), p) until a state
/// revisits.  Revisiting the immediately preceding state is a fixed point;
/// anything earlier is a limit cycle over the repeating segment.
HiddenPattern run_cognitive(const ConnectionMatrix& m, const StateVector& x0,
                            const ThresholdPolicy& p, std::size_t max_iters = kDefaultMaxIters);

/// Alternate y = thr(x . m) and x = thr(y . m^T), clamping only the seeded
/// side, until the (x, y) pair revisits.  The seed may live on either space.
RelationalPattern run_relational(const ConnectionMatrix& m, const StateVector& seed,
                                 const ThresholdPolicy& p,
                                 std::size_t max_iters = kDefaultMaxIters);

/// Threshold signal function: ON above threshold, previous signal at
/// equality, OFF below (bipolar mode keeps a -1 marker internally; binary
/// pairs always report OFF).
TriState bam_signal(long activation, long threshold, TriState prev, BamConfig::Mode mode);

/// Discrete additive BAM from a real activation vector on the row field.
/// No clamping: the input only fixes the initial signal.
RelationalPattern run_bam(const ConnectionMatrix& m, std::span<const long> x_input,
                          const BamConfig& cfg, std::size_t max_iters = kDefaultMaxIters);

}  // namespace cogmap
