#pragma once

#include <thread>

#include "biobj/heuristics.hpp"
#include "biobj/unidirectional.hpp"

namespace biobj {

struct BobaConfig {
  int threads = 2;  // 2: one worker per search; 1: round-robin on one worker
  QueueMode queue = QueueMode::kBucket;
  bool tuning = true;
  Backtrack backtrack = Backtrack::kCompact;
  bool with_paths = true;
  TraceObserver forward_observer;
  TraceObserver backward_observer;
};

struct BobaOutcome {
  ParetoFront front;
  ParetoFront forward_front;
  ParetoFront backward_front;
  SearchMetrics forward;
  SearchMetrics backward;

  SearchMetrics combined() const {
    SearchMetrics m = forward;
    m += backward;
    return m;
  }
};

/// Bi-directional search on precomputed heuristics: a forward (f1,f2) and a
/// backward (f2,f1) enhanced search sharing the two global upper bounds and,
/// when tuning is on, sharpening each other's secondary lower bounds. `hs` is
/// modified by tuning.
inline BobaOutcome boba_search(const BiGraph& g, HeuristicSet& hs, const BobaConfig& cfg) {
  BobaOutcome out;
  if (!hs.reachable) return out;

  SharedBounds shared(sat_add(hs.global_upper.c1, 1), sat_add(hs.global_upper.c2, 1));
  const EngineConfig fc{Direction::kForward, Objective::kFirst, true, cfg.queue, cfg.backtrack};
  const EngineConfig bc{Direction::kBackward, Objective::kSecond, true, cfg.queue, cfg.backtrack};
  std::span<Cost> fwd_sink, bwd_sink;
  if (cfg.tuning) {
    fwd_sink = tuning_target(hs, Direction::kForward, Objective::kFirst);
    bwd_sink = tuning_target(hs, Direction::kBackward, Objective::kSecond);
  }
  SearchEngine forward(g, hs, hs.to_goal, fc, shared, fwd_sink, cfg.forward_observer);
  SearchEngine backward(g, hs, hs.from_start, bc, shared, bwd_sink, cfg.backward_observer);

  if (cfg.threads >= 2) {
    std::jthread worker([&] { backward.run(); });
    forward.run();
  } else {
    bool busy = true;
    while (busy) {
      busy = forward.step();
      busy = backward.step() || busy;
    }
  }

  out.forward_front = collect_front(forward, cfg.with_paths);
  out.backward_front = collect_front(backward, cfg.with_paths);
  out.forward = forward.metrics();
  out.backward = backward.metrics();
  out.front = merge_fronts(out.forward_front, out.backward_front);
  return out;
}

inline BobaOutcome boba(const BiGraph& g, StateId start, StateId goal, const BobaConfig& cfg = {}) {
  if (start == goal) {
    BobaOutcome out;
    out.front.push_back({{0, 0}, {start}});
    return out;
  }
  HeuristicSet hs = compute_all_heuristics(g, start, goal, cfg.threads);
  return boba_search(g, hs, cfg);
}

}  // namespace biobj
