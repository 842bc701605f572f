#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "biobj/boba.hpp"
#include "biobj/oracle.hpp"

namespace biobj {

enum class Algorithm { kOracle, kBoa, kBoaEnh, kBoba };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kBoa: return "boa";
    case Algorithm::kBoaEnh: return "boa-enh";
    case Algorithm::kBoba: return "boba";
  }
  return "?";
}

struct SolveConfig {
  Algorithm algorithm = Algorithm::kBoba;
  Direction direction = Direction::kForward;  // boa / boa-enh only
  Objective primary = Objective::kFirst;      // boa / boa-enh only
  QueueMode queue = QueueMode::kBucket;
  int threads = 2;
  bool tuning = true;
  Backtrack backtrack = Backtrack::kCompact;
  bool with_paths = true;
  bool keep_heuristics = false;
};

struct RunMetrics {
  std::string algorithm;
  double wall_ms = 0;
  double heuristic_ms = 0;
  std::size_t solutions = 0;
  SearchMetrics search;
};

struct SolveResult {
  ParetoFront front;
  RunMetrics metrics;
  std::optional<HeuristicSet> heuristics;
};

/// Runs one point-to-point query with the configured algorithm. Ids are
/// 0-based. An unreachable goal yields an empty front.
inline SolveResult solve(const BiGraph& g, StateId start, StateId goal, const SolveConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };
  if (start >= g.num_states() || goal >= g.num_states()) throw RangeError("source/target out of range");

  SolveResult res;
  res.metrics.algorithm = std::string(to_string(cfg.algorithm));
  const auto t0 = Clock::now();

  if (cfg.algorithm == Algorithm::kOracle) {
    res.front = pareto_oracle(g, start, goal);
  } else if (start == goal) {
    res.front.push_back({{0, 0}, {start}});
  } else {
    HeuristicSet hs = compute_all_heuristics(g, start, goal, cfg.threads);
    res.metrics.heuristic_ms = ms_since(t0);
    if (cfg.algorithm == Algorithm::kBoba) {
      BobaConfig bc;
      bc.threads = cfg.threads;
      bc.queue = cfg.queue;
      bc.tuning = cfg.tuning;
      bc.backtrack = cfg.backtrack;
      bc.with_paths = cfg.with_paths;
      auto out = boba_search(g, hs, bc);
      res.front = std::move(out.front);
      res.metrics.search = out.combined();
    } else {
      UnidirectionalConfig uc;
      uc.direction = cfg.direction;
      uc.primary = cfg.primary;
      uc.queue = cfg.queue;
      uc.backtrack = cfg.backtrack;
      uc.with_paths = cfg.with_paths;
      auto out = cfg.algorithm == Algorithm::kBoa ? boa_star(g, hs, uc) : boa_enhanced(g, hs, uc);
      res.front = std::move(out.front);
      res.metrics.search = out.metrics;
    }
    if (cfg.keep_heuristics) res.heuristics = std::move(hs);
  }

  res.metrics.wall_ms = ms_since(t0);
  res.metrics.solutions = res.front.size();
  return res;
}

/// True if `path` is a walk in `g` whose arc costs can sum to exactly
/// `expected` (parallel arcs make the state sequence ambiguous, so every
/// combination of parallel arcs is considered).
inline bool path_realizes(const BiGraph& g, std::span<const StateId> path, const CostPair& expected) {
  if (path.empty()) return false;
  std::set<CostPair> sums{{0, 0}};
  for (std::size_t i = 1; i < path.size(); ++i) {
    std::set<CostPair> next;
    for (ArcId a : g.out_arcs(path[i - 1])) {
      if (g.arc(a).to != path[i]) continue;
      for (const CostPair& s : sums) {
        const CostPair t = s + g.arc(a).cost;
        if (weakly_dominates(t, expected)) next.insert(t);
      }
    }
    if (next.empty()) return false;
    sums = std::move(next);
  }
  return sums.contains(expected);
}

}  // namespace biobj
