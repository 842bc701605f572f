#pragma once

#include "biobj/front.hpp"
#include "biobj/search.hpp"

namespace biobj {

struct UnidirectionalConfig {
  Direction direction = Direction::kForward;
  Objective primary = Objective::kFirst;
  QueueMode queue = QueueMode::kBucket;
  Backtrack backtrack = Backtrack::kCompact;
  bool with_paths = true;
  TraceObserver observer;
};

struct SearchOutcome {
  ParetoFront front;  // sorted by increasing c1
  SearchMetrics metrics;
};

/// Turns an engine's solution list into a front sorted by c1.
inline ParetoFront collect_front(const SearchEngine& engine, bool with_paths) {
  ParetoFront front;
  front.reserve(engine.solutions().size());
  for (const auto& rec : engine.solutions()) {
    front.push_back({rec.cost, with_paths ? engine.path_of(rec) : std::vector<StateId>{}});
  }
  sort_by_first_objective(front);
  return front;
}

namespace detail {

inline SearchOutcome run_single(const BiGraph& g, HeuristicSet& hs, const UnidirectionalConfig& cfg, bool enhanced,
                                std::span<Cost> tuning_sink) {
  if (!hs.reachable) return {};
  const Objective p = cfg.primary;
  // Without a partner nobody lowers the primary bound, so it starts just
  // above the largest primary cost any Pareto solution can have.
  Cost cap[2] = {kInfinity, kInfinity};
  if (enhanced) cap[index_of(p)] = sat_add(hs.global_upper[p], 1);
  SharedBounds shared(cap[0], cap[1]);

  EngineConfig ec{cfg.direction, p, enhanced, cfg.queue, cfg.backtrack};
  SearchEngine engine(g, hs, hs.toward_target(cfg.direction), ec, shared, tuning_sink, cfg.observer);
  engine.run();
  return {collect_front(engine, cfg.with_paths), engine.metrics()};
}

}  // namespace detail

/// Plain BOA* in the configured direction and objective order.
inline SearchOutcome boa_star(const BiGraph& g, HeuristicSet& hs, const UnidirectionalConfig& cfg) {
  return detail::run_single(g, hs, cfg, false, {});
}

/// Enhanced BOA* run on its own. `tuning_sink` receives the tuning writes
/// (normally the opposite direction's lower bounds on the primary objective);
/// nothing in a uni-directional run reads them back.
inline SearchOutcome boa_enhanced(const BiGraph& g, HeuristicSet& hs, const UnidirectionalConfig& cfg,
                                  std::span<Cost> tuning_sink = {}) {
  return detail::run_single(g, hs, cfg, true, tuning_sink);
}

/// The opposite direction's lower-bound array on `primary`, i.e. where an
/// enhanced search in `dir` publishes its tuned values.
inline std::span<Cost> tuning_target(HeuristicSet& hs, Direction dir, Objective primary) {
  auto& opposite = dir == Direction::kForward ? hs.from_start : hs.to_goal;
  return opposite.lower[index_of(primary)];
}

}  // namespace biobj
