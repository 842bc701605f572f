#pragma once

#include <algorithm>
#include <vector>

#include "biobj/types.hpp"

namespace biobj {

/// One Pareto-optimal solution: its cost and (optionally) a start -> goal
/// state sequence realising it.
struct Solution {
  CostPair cost;
  std::vector<StateId> path;
};

using ParetoFront = std::vector<Solution>;

inline std::vector<CostPair> costs_of(const ParetoFront& front) {
  std::vector<CostPair> out;
  out.reserve(front.size());
  for (const auto& s : front) out.push_back(s.cost);
  return out;
}

/// Strictly increasing in c1 and strictly decreasing in c2.
inline bool is_well_formed(const std::vector<CostPair>& costs) {
  for (std::size_t i = 1; i < costs.size(); ++i) {
    if (!(costs[i - 1].c1 < costs[i].c1 && costs[i - 1].c2 > costs[i].c2)) return false;
  }
  return true;
}

inline void sort_by_first_objective(ParetoFront& front) {
  std::stable_sort(front.begin(), front.end(),
                   [](const Solution& a, const Solution& b) { return a.cost < b.cost; });
}

/// Union of the forward and backward solution sets: sorted by c1, equal
/// costs collapsed, weakly dominated entries removed.
inline ParetoFront merge_fronts(ParetoFront forward, ParetoFront backward) {
  ParetoFront all = std::move(forward);
  all.insert(all.end(), std::make_move_iterator(backward.begin()), std::make_move_iterator(backward.end()));
  sort_by_first_objective(all);
  ParetoFront out;
  for (auto& s : all) {
    if (!out.empty() && out.back().cost.c2 <= s.cost.c2) continue;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace biobj
