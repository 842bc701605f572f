#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "biobj/front.hpp"
#include "biobj/graph.hpp"

namespace biobj {

// Reference Pareto front by exhaustive label correcting. No heuristics, no
// bounds, no ordering assumptions; meant for small graphs only.

namespace detail {

struct OracleLabel {
  CostPair cost;
  StateId state;
  std::uint32_t parent;
  bool alive;
};

inline constexpr std::uint32_t kNoLabel = std::numeric_limits<std::uint32_t>::max();

}  // namespace detail

inline ParetoFront pareto_oracle(const BiGraph& g, StateId start, StateId goal) {
  const std::size_t n = g.num_states();
  if (start >= n || goal >= n) throw RangeError("start/goal out of range");

  std::vector<detail::OracleLabel> arena;
  std::vector<std::vector<std::uint32_t>> bags(n);
  std::deque<std::uint32_t> work;

  auto insert = [&](StateId s, CostPair cost, std::uint32_t parent) {
    auto& bag = bags[s];
    for (std::uint32_t id : bag) {
      if (weakly_dominates(arena[id].cost, cost)) return;
    }
    std::erase_if(bag, [&](std::uint32_t id) {
      if (!weakly_dominates(cost, arena[id].cost)) return false;
      arena[id].alive = false;
      return true;
    });
    const auto id = static_cast<std::uint32_t>(arena.size());
    arena.push_back({cost, s, parent, true});
    bag.push_back(id);
    work.push_back(id);
  };

  insert(start, {0, 0}, detail::kNoLabel);
  while (!work.empty()) {
    const std::uint32_t id = work.front();
    work.pop_front();
    if (!arena[id].alive) continue;
    const StateId s = arena[id].state;
    for (ArcId a : g.out_arcs(s)) {
      insert(g.arc(a).to, arena[id].cost + g.arc(a).cost, id);
    }
  }

  ParetoFront front;
  for (std::uint32_t id : bags[goal]) {
    Solution sol{arena[id].cost, {}};
    for (std::uint32_t cur = id; cur != detail::kNoLabel; cur = arena[cur].parent) {
      sol.path.push_back(arena[cur].state);
    }
    std::reverse(sol.path.begin(), sol.path.end());
    front.push_back(std::move(sol));
  }
  sort_by_first_objective(front);
  return front;
}

}  // namespace biobj
