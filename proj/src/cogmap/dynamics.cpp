#include "cogmap/dynamics.hpp"

#include <algorithm>
#include <map>

namespace cogmap {

namespace {

// Internal coordinate encoding: -1 bipolar-off marker, 0 off, 1 on, 2 indet.
using Signed = std::int8_t;
using SignedVec = std::vector<Signed>;

NeutroValue lift_signed(Signed s) {
  switch (s) {
    case -1: return {-1, 0};
    case 1: return {1, 0};
    case 2: return {0, 1};
    default: return {0, 0};
  }
}

TriState to_public(Signed s) {
  if (s == 1) return TriState::On;
  if (s == 2) return TriState::Indet;
  return TriState::Off;  // bipolar-off marker maps to OFF
}

std::vector<TriState> to_public(const SignedVec& v) {
  std::vector<TriState> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](Signed s) { return to_public(s); });
  return out;
}

Signed from_public(TriState s) {
  if (s == TriState::On) return 1;
  if (s == TriState::Indet) return 2;
  return 0;
}

// raw_j = sum_i lift(x_i) * m(i,j); the transposed leg passes m^T's grid.
std::vector<NeutroValue> state_times(const SignedVec& x, const ConnectionMatrix::Grid& m,
                                     std::size_t ncols) {
  std::vector<NeutroValue> raw(ncols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    NeutroValue s = lift_signed(x[i]);
    for (std::size_t j = 0; j < ncols; ++j) {
      if (m[i][j].is_zero()) continue;
      raw[j] = neutro_add(raw[j], neutro_mul(m[i][j], s));
    }
  }
  return raw;
}

SignedVec collapse_all(const std::vector<NeutroValue>& raw, const std::set<std::size_t>& clamp,
                       const ThresholdPolicy& p) {
  SignedVec out(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j)
    out[j] = static_cast<Signed>(collapse_signed(raw[j], p));
  for (std::size_t c : clamp) out[c] = 1;  // clamp wins, including over INDET
  return out;
}

void require_kind(const ConnectionMatrix& m, MatrixKind k, const char* what) {
  if (m.kind() != k)
    fail(Errc::KindMismatch, std::string(what) + " requires a " + std::string(to_string(k)) +
                                 " matrix, got " + std::string(to_string(m.kind())));
}

}  // namespace

StateVector threshold_update(std::span<const NeutroValue> raw, const StateVector& prev,
                             const ThresholdPolicy& p) {
  if (raw.size() != prev.size())
    fail(Errc::ShapeMismatch, "threshold_update length mismatch");
  std::vector<TriState> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = collapse(raw[i], p);
  for (std::size_t c : prev.clamp()) out[c] = TriState::On;
  return StateVector(prev.space(), std::move(out), prev.clamp());
}

HiddenPattern run_cognitive(const ConnectionMatrix& m, const StateVector& x0,
                            const ThresholdPolicy& p, std::size_t max_iters) {
  require_kind(m, MatrixKind::Cognitive, "run_cognitive");
  if (x0.space() != m.row_space())
    fail(Errc::ShapeMismatch, "state vector space does not match the matrix space");
  if (max_iters < 1) fail(Errc::Validation, "max_iters must be at least 1");

  SignedVec x(x0.size());
  for (std::size_t i = 0; i < x0.size(); ++i) x[i] = from_public(x0.at(i));
  const auto& clamp = x0.clamp();

  auto step = [&](const SignedVec& s) {
    return collapse_all(state_times(s, m.entries(), m.cols()), clamp, p);
  };

  std::vector<SignedVec> history{x};
  std::map<SignedVec, std::size_t> seen{{x, 0}};
  HiddenPattern out;
  out.trace.push_back(to_public(x));

  for (std::size_t it = 1; it <= max_iters; ++it) {
    x = step(x);
    history.push_back(x);
    out.trace.push_back(to_public(x));
    auto found = seen.find(x);
    if (found != seen.end()) {
      out.iterations = it;
      std::size_t first = found->second;
      if (first == history.size() - 2) {
        out.kind = PatternKind::FixedPoint;
        out.states = {to_public(x)};
        if (step(x) != x) fail(Errc::Validation, "fixed point failed re-step self-check");
      } else {
        out.kind = PatternKind::LimitCycle;
        for (std::size_t k = first; k + 1 < history.size(); ++k)
          out.states.push_back(to_public(history[k]));
        if (step(history[history.size() - 2]) != history[first])
          fail(Errc::Validation, "limit cycle failed re-step self-check");
      }
      return out;
    }
    seen.emplace(x, history.size() - 1);
  }
  fail(Errc::NonConvergence,
       "no fixed point or limit cycle within " + std::to_string(max_iters) + " iterations");
}

RelationalPattern run_relational(const ConnectionMatrix& m, const StateVector& seed,
                                 const ThresholdPolicy& p, std::size_t max_iters) {
  require_kind(m, MatrixKind::Relational, "run_relational");
  if (max_iters < 1) fail(Errc::Validation, "max_iters must be at least 1");

  bool domain_seeded;
  if (seed.space() == m.row_space()) domain_seeded = true;
  else if (seed.space() == m.col_space()) domain_seeded = false;
  else fail(Errc::ShapeMismatch, "seed aligns with neither space of the relational matrix");

  const ConnectionMatrix mt = m.transposed();
  SignedVec x(m.rows(), 0), y(m.cols(), 0);
  std::set<std::size_t> clamp_x, clamp_y;
  if (domain_seeded) {
    for (std::size_t i = 0; i < seed.size(); ++i) x[i] = from_public(seed.at(i));
    clamp_x = seed.clamp();
  } else {
    for (std::size_t j = 0; j < seed.size(); ++j) y[j] = from_public(seed.at(j));
    clamp_y = seed.clamp();
  }

  RelationalPattern out;
  out.half_steps.push_back({domain_seeded ? 'D' : 'R',
                            to_public(domain_seeded ? x : y),
                            {}});

  auto forward = [&]() { y = collapse_all(state_times(x, m.entries(), m.cols()), clamp_y, p); };
  auto backward = [&]() { x = collapse_all(state_times(y, mt.entries(), mt.cols()), clamp_x, p); };

  using PairKey = std::pair<SignedVec, SignedVec>;
  std::vector<PairKey> history;
  std::map<PairKey, std::size_t> seen;

  auto round = [&]() {
    if (domain_seeded) {
      forward();
      out.half_steps.push_back({'R', to_public(y), {}});
      backward();
      out.half_steps.push_back({'D', to_public(x), {}});
    } else {
      backward();
      out.half_steps.push_back({'D', to_public(x), {}});
      forward();
      out.half_steps.push_back({'R', to_public(y), {}});
    }
  };
  auto as_pair = [&](const PairKey& k) {
    return StatePair{to_public(k.first), to_public(k.second)};
  };

  for (std::size_t it = 1; it <= max_iters; ++it) {
    round();
    PairKey key{x, y};
    history.push_back(key);
    out.trace.push_back(as_pair(key));
    auto found = seen.find(key);
    if (found != seen.end()) {
      out.iterations = it;
      std::size_t first = found->second;
      if (first == history.size() - 2) {
        out.kind = PatternKind::FixedPoint;
        out.states = {as_pair(key)};
      } else {
        out.kind = PatternKind::LimitCycle;
        for (std::size_t k = first; k + 1 < history.size(); ++k)
          out.states.push_back(as_pair(history[k]));
      }
      return out;
    }
    seen.emplace(std::move(key), history.size() - 1);
  }
  fail(Errc::NonConvergence,
       "no fixed pair or pair cycle within " + std::to_string(max_iters) + " iterations");
}

TriState bam_signal(long activation, long threshold, TriState prev, BamConfig::Mode) {
  if (activation > threshold) return TriState::On;
  if (activation < threshold) return TriState::Off;
  return prev;
}

RelationalPattern run_bam(const ConnectionMatrix& m, std::span<const long> x_input,
                          const BamConfig& cfg, std::size_t max_iters) {
  require_kind(m, MatrixKind::Bam, "run_bam");
  if (x_input.size() != m.rows())
    fail(Errc::ShapeMismatch, "BAM input length does not match the row field");
  if (!cfg.thresholds_u.empty() && cfg.thresholds_u.size() != m.rows())
    fail(Errc::ShapeMismatch, "thresholds_u length does not match the row field");
  if (!cfg.thresholds_v.empty() && cfg.thresholds_v.size() != m.cols())
    fail(Errc::ShapeMismatch, "thresholds_v length does not match the column field");
  if (!cfg.initial_y.empty() && cfg.initial_y.size() != m.cols())
    fail(Errc::ShapeMismatch, "initial_y length does not match the column field");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_pure_real())
        fail(Errc::Validation, "BAM matrix entries must be plain integers");
  if (max_iters < 1) fail(Errc::Validation, "max_iters must be at least 1");

  const bool bipolar = cfg.mode == BamConfig::Mode::Bipolar;
  const long off_signal = bipolar ? -1 : 0;
  auto u_at = [&](std::size_t i) { return cfg.thresholds_u.empty() ? 0 : cfg.thresholds_u[i]; };
  auto v_at = [&](std::size_t j) { return cfg.thresholds_v.empty() ? 0 : cfg.thresholds_v[j]; };
  auto sig = [&](long act, long thr, long prev) {
    if (act > thr) return 1L;
    if (act < thr) return off_signal;
    return prev;
  };

  std::vector<long> sx(m.rows()), sy(m.cols(), off_signal);
  for (std::size_t i = 0; i < m.rows(); ++i) sx[i] = sig(x_input[i], u_at(i), off_signal);
  for (std::size_t j = 0; j < cfg.initial_y.size(); ++j)
    sy[j] = cfg.initial_y[j] == TriState::On ? 1 : off_signal;

  auto as_states = [](const std::vector<long>& s) {
    std::vector<TriState> out(s.size());
    std::transform(s.begin(), s.end(), out.begin(),
                   [](long v) { return v == 1 ? TriState::On : TriState::Off; });
    return out;
  };

  RelationalPattern out;
  out.half_steps.push_back({'D', as_states(sx), std::vector<long>(x_input.begin(), x_input.end())});

  using PairKey = std::pair<std::vector<long>, std::vector<long>>;
  std::vector<PairKey> history;
  std::map<PairKey, std::size_t> seen;
  auto as_pair = [&](const PairKey& k) { return StatePair{as_states(k.first), as_states(k.second)}; };

  for (std::size_t it = 1; it <= max_iters; ++it) {
    std::vector<long> raw_y(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sx[i] == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) raw_y[j] += sx[i] * m.at(i, j).real;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) sy[j] = sig(raw_y[j], v_at(j), sy[j]);
    out.half_steps.push_back({'R', as_states(sy), raw_y});

    std::vector<long> raw_x(m.rows(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sy[j] == 0) continue;
      for (std::size_t i = 0; i < m.rows(); ++i) raw_x[i] += sy[j] * m.at(i, j).real;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) sx[i] = sig(raw_x[i], u_at(i), sx[i]);
    out.half_steps.push_back({'D', as_states(sx), raw_x});

    PairKey key{sx, sy};
    history.push_back(key);
    out.trace.push_back(as_pair(key));
    auto found = seen.find(key);
    if (found != seen.end()) {
      out.iterations = it;
      std::size_t first = found->second;
      if (first == history.size() - 2) {
        out.kind = PatternKind::FixedPoint;
        out.states = {as_pair(key)};
      } else {
        out.kind = PatternKind::LimitCycle;
        for (std::size_t k = first; k + 1 < history.size(); ++k)
          out.states.push_back(as_pair(history[k]));
      }
      return out;
    }
    seen.emplace(std::move(key), history.size() - 1);
  }
  fail(Errc::NonConvergence,
       "BAM did not reach a fixed pair within " + std::to_string(max_iters) + " iterations");
}

}  // namespace cogmap
