#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <ostream>
#include <queue>
#include <span>
#include <thread>
#include <tuple>
#include <vector>

#include "biobj/graph.hpp"

namespace biobj {

/// Shortest-path tree produced by one preliminary search. For every reached
/// state it stores the arc through which the state was reached from the root
/// in the view the search ran on, so walking parents leads back to the root.
struct SPTree {
  std::vector<ArcId> parent_arc;
  bool reversed = false;  // view the tree was built on
  Objective primary = Objective::kFirst;
  StateId root = kNoState;

  bool contains(StateId s) const noexcept {
    return s == root || (s < parent_arc.size() && parent_arc[s] != kNoArc);
  }

  /// State sequence s, ..., root. Throws if s is not in the tree.
  std::vector<StateId> walk(const BiGraph& g, StateId s) const {
    if (!contains(s)) throw ReconstructionError("state " + std::to_string(s) + " not in tree");
    const GraphView view(g, reversed);
    std::vector<StateId> seq{s};
    while (s != root) {
      if (seq.size() > g.num_states()) throw ReconstructionError("cycle in shortest-path tree");
      s = view.tail(parent_arc[s]);
      seq.push_back(s);
    }
    return seq;
  }
};

struct LexSearchOptions {
  /// Consistent lower bound on the primary objective (empty: none). States
  /// with an infinite guide value are never reached.
  std::span<const Cost> guide = {};
  /// Stop before expanding a state whose primary f exceeds this bound.
  Cost primary_bound = kInfinity;
  /// Same as `primary_bound` but read on every pop; may be lowered concurrently.
  const std::atomic<Cost>* live_bound = nullptr;
  /// Non-zero entries mark states that are never reached or expanded.
  std::span<const std::uint8_t> skip = {};
  /// When `publish_state` settles, its secondary cost is lowered into
  /// `publish_cell`.
  StateId publish_state = kNoState;
  std::atomic<Cost>* publish_cell = nullptr;
};

struct LexSearchResult {
  std::vector<CostPair> cost;  // (c1, c2) of the lexicographic optimum from root
  std::vector<std::uint8_t> reached;
  SPTree tree;
  std::size_t expanded = 0;
};

namespace detail {

inline void lower_cell(std::atomic<Cost>& cell, Cost value) noexcept {
  Cost cur = cell.load(std::memory_order_relaxed);
  while (value < cur && !cell.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

}  // namespace detail

/// Single-label lexicographic A*: computes, for every state it settles, the
/// (primary, secondary)-lexicographically minimal cost from `root`.
inline LexSearchResult bounded_lex_astar(const GraphView& view, StateId root, Objective primary,
                                         const LexSearchOptions& opt = {}) {
  const std::size_t n = view.num_states();
  if (root >= n) throw RangeError("root " + std::to_string(root) + " out of range");
  const Objective secondary = other(primary);

  LexSearchResult res;
  res.cost.assign(n, CostPair{kInfinity, kInfinity});
  res.reached.assign(n, 0);
  res.tree.parent_arc.assign(n, kNoArc);
  res.tree.reversed = view.reversed();
  res.tree.primary = primary;
  res.tree.root = root;

  auto guide = [&](StateId s) -> Cost { return opt.guide.empty() ? 0 : opt.guide[s]; };
  auto skipped = [&](StateId s) { return !opt.skip.empty() && opt.skip[s] != 0; };

  // (f_primary, g_secondary, state); lazy deletion of stale entries.
  using Entry = std::tuple<Cost, Cost, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  if (skipped(root) || guide(root) == kInfinity) return res;
  res.cost[root] = {0, 0};
  open.emplace(guide(root), 0, root);

  while (!open.empty()) {
    const auto [f, gq, s] = open.top();
    open.pop();
    if (res.reached[s] || gq != res.cost[s][secondary] || f != sat_add(res.cost[s][primary], guide(s))) {
      continue;
    }
    Cost bound = opt.primary_bound;
    if (opt.live_bound) bound = std::min(bound, opt.live_bound->load(std::memory_order_relaxed));
    if (f > bound) break;

    res.reached[s] = 1;
    ++res.expanded;
    if (s == opt.publish_state && opt.publish_cell) detail::lower_cell(*opt.publish_cell, gq);

    for (ArcId a : view.successors(s)) {
      const StateId t = view.head(a);
      if (res.reached[t] || skipped(t) || guide(t) == kInfinity) continue;
      const CostPair cand = res.cost[s] + view.cost(a);
      if (lex_less(cand, res.cost[t], primary)) {
        res.cost[t] = cand;
        res.tree.parent_arc[t] = a;
        open.emplace(sat_add(cand[primary], guide(t)), cand[secondary], t);
      }
    }
  }

  for (StateId s = 0; s < n; ++s) {
    if (!res.reached[s]) {
      res.cost[s] = {kInfinity, kInfinity};
      res.tree.parent_arc[s] = kNoArc;
    }
  }
  return res;
}

/// Lower and upper bounds on complementary paths for one search direction.
/// For the forward search these bound paths s -> goal; for the backward
/// search they bound paths start -> s.
///
///   lower[k][s]  lower bound on objective k (h_k, or h'_k)
///   upper[k][s]  objective-k cost of the path that is lexicographically
///                optimal for the other objective (ub_k, or ub'_k)
///   tree[k]      tree of the (k, other)-lexicographic optimal paths; walking
///                it from s costs (lower[k][s], upper[other][s])
struct DirectionalBounds {
  std::array<std::vector<Cost>, 2> lower;
  std::array<std::vector<Cost>, 2> upper;
  std::array<SPTree, 2> tree;

  Cost h(Objective k, StateId s) const noexcept { return lower[index_of(k)][s]; }
  Cost ub(Objective k, StateId s) const noexcept { return upper[index_of(k)][s]; }
  const SPTree& tree_for(Objective primary) const noexcept { return tree[index_of(primary)]; }
  bool usable(StateId s) const noexcept {
    return lower[0][s] != kInfinity && lower[1][s] != kInfinity;
  }
};

struct HeuristicSet {
  StateId start = kNoState;
  StateId goal = kNoState;
  bool reachable = false;
  CostPair global_lower{kInfinity, kInfinity};  // (h1(start), h2(start))
  CostPair global_upper{kInfinity, kInfinity};  // (ub1, ub2)
  DirectionalBounds to_goal;     // h, ub
  DirectionalBounds from_start;  // h', ub'

  const DirectionalBounds& toward_target(Direction d) const noexcept {
    return d == Direction::kForward ? to_goal : from_start;
  }
  DirectionalBounds& toward_target(Direction d) noexcept {
    return d == Direction::kForward ? to_goal : from_start;
  }
};

namespace detail {

template <typename A, typename B>
void run_pair(int workers, A&& a, B&& b) {
  if (workers >= 2) {
    std::jthread t(std::forward<B>(b));
    a();
  } else {
    a();
    b();
  }
}

inline void drop_beyond(LexSearchResult& r, Objective primary, Cost bound) {
  for (std::size_t s = 0; s < r.cost.size(); ++s) {
    if (r.reached[s] && r.cost[s][primary] > bound) {
      r.reached[s] = 0;
      r.cost[s] = {kInfinity, kInfinity};
      r.tree.parent_arc[s] = kNoArc;
    }
  }
}

inline std::vector<std::uint8_t> unreached_mask(const LexSearchResult& r) {
  std::vector<std::uint8_t> mask(r.reached.size());
  for (std::size_t s = 0; s < mask.size(); ++s) mask[s] = r.reached[s] ? 0 : 1;
  return mask;
}

inline std::vector<Cost> column(const LexSearchResult& r, Objective k) {
  std::vector<Cost> out(r.cost.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = r.cost[s][k];
  return out;
}

}  // namespace detail

/// Two-phase bounded precomputation of every lower bound, upper bound and
/// complementary-path tree used by the main searches.
///
/// Phase 1 runs a (c1,c2) search forward from start and a (c2,c1) search
/// backward from goal; each publishes its optimum start-goal path as soon as
/// it is settled, which fixes one global upper bound for the other search.
/// Phase 2 runs the opposite-order searches, guided by the phase-1 lower
/// bounds, cut off at the global bounds, and restricted to states phase 1
/// found within bounds for the same objective.
///
/// With `workers >= 2` the two searches of each phase run concurrently; the
/// result does not depend on the interleaving.
inline HeuristicSet compute_all_heuristics(const BiGraph& g, StateId start, StateId goal, int workers = 1) {
  const std::size_t n = g.num_states();
  if (start >= n || goal >= n) throw RangeError("start/goal out of range");
  if (start == goal) throw RangeError("start and goal must differ");

  const GraphView fwd(g, false);
  const GraphView bwd(g, true);
  constexpr Objective c1 = Objective::kFirst;
  constexpr Objective c2 = Objective::kSecond;

  HeuristicSet hs;
  hs.start = start;
  hs.goal = goal;

  // Phase 1.
  std::atomic<Cost> ub1{kInfinity};
  std::atomic<Cost> ub2{kInfinity};
  LexSearchResult from_start_12, to_goal_21;
  detail::run_pair(
      workers,
      [&] {
        from_start_12 = bounded_lex_astar(
            fwd, start, c1, {.live_bound = &ub1, .publish_state = goal, .publish_cell = &ub2});
      },
      [&] {
        to_goal_21 = bounded_lex_astar(
            bwd, goal, c2, {.live_bound = &ub2, .publish_state = start, .publish_cell = &ub1});
      });

  if (!from_start_12.reached[goal]) return hs;
  hs.reachable = true;
  hs.global_upper = {to_goal_21.cost[start].c1, from_start_12.cost[goal].c2};
  hs.global_lower = {from_start_12.cost[goal].c1, to_goal_21.cost[start].c2};

  // Trim whatever was settled before the partner's bound arrived.
  detail::drop_beyond(from_start_12, c1, hs.global_upper.c1);
  detail::drop_beyond(to_goal_21, c2, hs.global_upper.c2);

  // Phase 2.
  const std::vector<Cost> h1_from_start = detail::column(from_start_12, c1);
  const std::vector<Cost> h2_to_goal = detail::column(to_goal_21, c2);
  const auto skip_from_start = detail::unreached_mask(from_start_12);
  const auto skip_to_goal = detail::unreached_mask(to_goal_21);

  LexSearchResult from_start_21, to_goal_12;
  detail::run_pair(
      workers,
      [&] {
        from_start_21 = bounded_lex_astar(
            fwd, start, c2,
            {.guide = h2_to_goal, .primary_bound = hs.global_upper.c2, .skip = skip_to_goal});
      },
      [&] {
        to_goal_12 = bounded_lex_astar(
            bwd, goal, c1,
            {.guide = h1_from_start, .primary_bound = hs.global_upper.c1, .skip = skip_from_start});
      });

  auto fill = [](DirectionalBounds& out, LexSearchResult& lex12, LexSearchResult& lex21) {
    out.lower[0] = detail::column(lex12, c1);
    out.upper[1] = detail::column(lex12, c2);
    out.tree[0] = std::move(lex12.tree);
    out.lower[1] = detail::column(lex21, c2);
    out.upper[0] = detail::column(lex21, c1);
    out.tree[1] = std::move(lex21.tree);
  };
  fill(hs.to_goal, to_goal_12, to_goal_21);
  fill(hs.from_start, from_start_12, from_start_21);
  return hs;
}

/// Diagnostic dump: one line per state, `<id> <h1> <h2> <ub1> <ub2>` with
/// 1-based ids and `inf` for unreached entries.
inline void dump_heuristics(std::ostream& out, const HeuristicSet& hs) {
  auto put = [&](Cost c) -> std::ostream& {
    if (c == kInfinity) return out << "inf";
    return out << c;
  };
  out << "c state h1 h2 ub1 ub2\n";
  if (!hs.reachable) return;
  const auto& b = hs.to_goal;
  for (std::size_t s = 0; s < b.lower[0].size(); ++s) {
    out << s + 1 << ' ';
    put(b.lower[0][s]) << ' ';
    put(b.lower[1][s]) << ' ';
    put(b.upper[0][s]) << ' ';
    put(b.upper[1][s]) << '\n';
  }
}

}  // namespace biobj
