#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <vector>

#include "biobj/frontier.hpp"
#include "biobj/heuristics.hpp"
#include "biobj/pathstore.hpp"

namespace biobj {

enum class Backtrack : std::uint8_t { kCompact, kConventional };

/// A search node. `parent_path` is used with compact backtracking,
/// `parent_slot` with conventional backtracking.
struct SearchNode {
  StateId state = kNoState;
  CostPair g;
  CostPair f;
  ArcId parent_arc = kNoArc;
  PathId parent_path = 0;
  std::uint32_t parent_slot = kNoSlot;

  static constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();
};

/// Slot allocator for node records. With recycling on, released slots are
/// handed out again; with recycling off every record is kept until the end.
class NodePool {
 public:
  explicit NodePool(bool recycle) : recycle_(recycle) {}

  std::uint32_t acquire(const SearchNode& node) {
    std::uint32_t slot;
    if (!free_.empty()) {
      slot = free_.back();
      free_.pop_back();
      slots_[slot] = node;
      ++reused_;
    } else {
      slot = static_cast<std::uint32_t>(slots_.size());
      slots_.push_back(node);
    }
    ++allocated_;
    peak_live_ = std::max(peak_live_, ++live_);
    return slot;
  }

  void release(std::uint32_t slot) {
    if (!recycle_) return;
    free_.push_back(slot);
    --live_;
  }

  const SearchNode& operator[](std::uint32_t slot) const noexcept { return slots_[slot]; }

  std::size_t allocated() const noexcept { return allocated_; }
  std::size_t live() const noexcept { return live_; }
  std::size_t peak_live() const noexcept { return peak_live_; }
  std::size_t reused() const noexcept { return reused_; }

 private:
  bool recycle_;
  std::vector<SearchNode> slots_;
  std::vector<std::uint32_t> free_;
  std::size_t allocated_ = 0;
  std::size_t live_ = 0;
  std::size_t peak_live_ = 0;
  std::size_t reused_ = 0;
};

/// One entry of a search's solution list. Solutions found by the early
/// update rule end at `state` != target and are completed with the
/// complementary tree (`needs_suffix`).
struct SolutionRecord {
  CostPair cost{};
  StateId state = kNoState;
  PathId path = 0;                            // compact backtracking
  std::uint32_t slot = SearchNode::kNoSlot;  // conventional backtracking
  bool needs_suffix = false;
};

class SolutionList {
 public:
  void add(const SolutionRecord& s) { items_.push_back(s); }
  void remove_last() { items_.pop_back(); }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  const SolutionRecord& last() const { return items_.back(); }
  const SolutionRecord& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

 private:
  std::vector<SolutionRecord> items_;
};

/// A new solution with primary cost `new_primary` is about to be appended.
/// The previous one is dominated by it iff both share the primary cost
/// (solutions arrive in non-decreasing primary order with strictly
/// decreasing secondary cost).
inline bool last_solution_check(SolutionList& sol, Objective primary, Cost new_primary) {
  if (!sol.empty() && sol.last().cost[primary] == new_primary) {
    sol.remove_last();
    return true;
  }
  return false;
}

/// Global upper bounds shared by the two searches of a bi-directional run.
/// cell(k) bounds objective k of every solution still to be found; in
/// forward (f1,f2) terms cell(c1) is g1min(start) and cell(c2) is
/// g2min(goal). Writes only ever lower a cell.
class SharedBounds {
 public:
  SharedBounds(Cost ub1, Cost ub2) : cells_{ub1, ub2} {}
  SharedBounds(const SharedBounds&) = delete;
  SharedBounds& operator=(const SharedBounds&) = delete;

  Cost load(Objective k) const noexcept { return cells_[index_of(k)].load(std::memory_order_relaxed); }

  /// Lowers cell k to `value` if that is smaller. Returns the previous value.
  Cost lower(Objective k, Cost value) noexcept {
    auto& cell = cells_[index_of(k)];
    Cost cur = cell.load(std::memory_order_relaxed);
    const Cost prev = cur;
    while (value < cur && !cell.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
    return prev;
  }

  CostPair snapshot() const noexcept { return {load(Objective::kFirst), load(Objective::kSecond)}; }

 private:
  std::array<std::atomic<Cost>, 2> cells_;
};

struct SearchMetrics {
  std::size_t popped = 0;
  std::size_t generated = 0;  // node records created (origin included)
  std::size_t expanded = 0;   // pops that survived the dominance checks
  std::size_t successor_expansions = 0;
  std::size_t pruned_at_pop = 0;
  std::size_t pruned_at_generation = 0;
  std::size_t peak_open = 0;
  std::size_t peak_live_records = 0;
  std::size_t pool_reuse = 0;
  std::size_t pathstore_entries = 0;
  std::size_t tuning_writes = 0;

  std::size_t pruned() const noexcept { return pruned_at_pop + pruned_at_generation; }

  /// Estimated bytes held by node records and backtracking entries.
  std::size_t memory_bytes() const noexcept {
    return peak_live_records * sizeof(SearchNode) + pathstore_entries * sizeof(PathStore::Entry);
  }

  SearchMetrics& operator+=(const SearchMetrics& o) noexcept {
    popped += o.popped;
    generated += o.generated;
    expanded += o.expanded;
    successor_expansions += o.successor_expansions;
    pruned_at_pop += o.pruned_at_pop;
    pruned_at_generation += o.pruned_at_generation;
    peak_open += o.peak_open;
    peak_live_records += o.peak_live_records;
    pool_reuse += o.pool_reuse;
    pathstore_entries += o.pathstore_entries;
    tuning_writes += o.tuning_writes;
    return *this;
  }
};

struct TraceEvent {
  enum class Kind {
    kPop,
    kBreak,
    kPrunedAtPop,
    kTune,
    kBoundUpdate,
    kSolution,
    kSolutionRemoved,
    kTerminal,
    kExpand,
    kGenerate,
    kPrunedAtGeneration,
  };
  Kind kind;
  StateId state = kNoState;
  CostPair g;
  CostPair f;
  Cost previous = 0;  // kBoundUpdate / kTune: old value
  Cost value = 0;     // kBoundUpdate / kTune: new value
};

using TraceObserver = std::function<void(const TraceEvent&)>;

struct EngineConfig {
  Direction direction = Direction::kForward;
  Objective primary = Objective::kFirst;
  bool enhanced = true;
  QueueMode queue = QueueMode::kBucket;
  Backtrack backtrack = Backtrack::kCompact;
};

/// Uni-directional bi-objective A* in one direction and objective order.
///
/// With `enhanced` off this is plain BOA*. With it on, the engine adds
/// termination on the partner's primary bound, secondary-heuristic tuning,
/// early solution updates via the complementary tree, terminal-node
/// skipping and primary-bound pruning at generation.
///
/// The engine reads its bounds toward the target from `bounds`; the
/// secondary lower bounds may be rewritten concurrently by a partner search
/// and are therefore accessed atomically. `tuning_sink`, if non-empty, is the
/// partner's secondary lower-bound array and receives this search's first
/// valid primary g-value per state.
class SearchEngine {
 public:
  SearchEngine(const BiGraph& g, const HeuristicSet& hs, DirectionalBounds& bounds, const EngineConfig& cfg,
               SharedBounds& shared, std::span<Cost> tuning_sink = {}, TraceObserver observer = {})
      : cfg_(cfg),
        p_(cfg.primary),
        q_(other(cfg.primary)),
        view_(g, cfg.direction == Direction::kBackward),
        origin_(cfg.direction == Direction::kForward ? hs.start : hs.goal),
        target_(cfg.direction == Direction::kForward ? hs.goal : hs.start),
        bounds_(bounds),
        shared_(shared),
        tuning_sink_(tuning_sink),
        observer_(std::move(observer)),
        open_(make_queue()),
        pool_(cfg.backtrack == Backtrack::kCompact),
        gmin_(g.num_states(), kInfinity) {
    if (cfg.backtrack == Backtrack::kCompact) store_.emplace(view_);
    if (!hs.reachable || !usable(origin_)) finished_ = true;
  }

  SearchEngine(const SearchEngine&) = delete;
  SearchEngine& operator=(const SearchEngine&) = delete;

  bool done() const noexcept { return finished_; }

  /// Processes one Open-list entry. Returns false once the search is over.
  bool step() {
    if (finished_) return false;
    if (!origin_generated_) {
      origin_generated_ = true;
      if (!generate_origin()) {
        finished_ = true;
        return false;
      }
    }
    auto top = open_.pop_min();
    if (!top) {
      finished_ = true;
      return false;
    }
    const std::uint32_t slot = top->second;
    const SearchNode x = pool_[slot];
    pool_.release(slot);
    ++metrics_.popped;
    emit(TraceEvent::Kind::kPop, x);

    if (cfg_.enhanced && x.f[p_] >= shared_.load(p_)) {
      emit(TraceEvent::Kind::kBreak, x);
      finished_ = true;
      return false;
    }
    if (x.g[q_] >= gmin_at(x.state) || x.f[q_] >= shared_.load(q_)) {
      ++metrics_.pruned_at_pop;
      emit(TraceEvent::Kind::kPrunedAtPop, x);
      return true;
    }

    if (cfg_.enhanced && !tuning_sink_.empty() && gmin_at(x.state) == kInfinity) tune(x);
    set_gmin(x);
    ++metrics_.expanded;

    SolutionRecord rec{.state = x.state};
    PathId pid = 0;
    if (store_) {
      pid = store_->record(x.state, x.parent_arc, x.parent_path);
      rec.path = pid;
    } else {
      rec.slot = slot;
    }

    if (x.state == target_) {
      if (last_solution_check(sol_, p_, x.f[p_])) emit(TraceEvent::Kind::kSolutionRemoved, x);
      rec.cost = x.g;
      sol_.add(rec);
      emit(TraceEvent::Kind::kSolution, x);
      return true;
    }

    if (cfg_.enhanced) {
      const Cost joined = sat_add(x.g[q_], bounds_.upper[index_of(q_)][x.state]);
      if (joined < shared_.load(q_)) {
        lower_own_bound(x, joined);
        if (last_solution_check(sol_, p_, x.f[p_])) emit(TraceEvent::Kind::kSolutionRemoved, x);
        rec.cost[p_] = x.f[p_];
        rec.cost[q_] = joined;
        rec.needs_suffix = true;
        sol_.add(rec);
        emit(TraceEvent::Kind::kSolution, x);
        if (h_primary(x.state) == bounds_.upper[index_of(p_)][x.state]) {
          emit(TraceEvent::Kind::kTerminal, x);
          return true;
        }
      }
    }

    expand(x, slot, pid);
    return true;
  }

  void run() {
    while (step()) {
    }
  }

  const SolutionList& solutions() const noexcept { return sol_; }

  SearchMetrics metrics() const {
    SearchMetrics m = metrics_;
    m.generated = pool_.allocated();
    m.peak_live_records = pool_.peak_live();
    m.pool_reuse = pool_.reused();
    m.pathstore_entries = store_ ? store_->total_entries() : 0;
    return m;
  }

  const PathStore* path_store() const noexcept { return store_ ? &*store_ : nullptr; }
  const GraphView& view() const noexcept { return view_; }
  Direction direction() const noexcept { return cfg_.direction; }

  /// Full start -> goal state sequence of a solution of this search.
  std::vector<StateId> path_of(const SolutionRecord& s) const {
    std::vector<StateId> seq;
    const SPTree* tree = s.needs_suffix ? &bounds_.tree_for(p_) : nullptr;
    if (store_) {
      seq = store_->reconstruct(s.state, s.path, target_, tree);
    } else {
      for (std::uint32_t cur = s.slot; cur != SearchNode::kNoSlot; cur = pool_[cur].parent_slot) {
        seq.push_back(pool_[cur].state);
      }
      std::reverse(seq.begin(), seq.end());
      if (s.state != target_) {
        if (!tree) throw ReconstructionError("missing complementary tree");
        const auto tail = tree->walk(view_.graph(), s.state);
        seq.insert(seq.end(), tail.begin() + 1, tail.end());
      }
    }
    if (cfg_.direction == Direction::kBackward) std::reverse(seq.begin(), seq.end());
    return seq;
  }

 private:
  FrontierQueue<std::uint32_t> make_queue() const {
    if (cfg_.queue == QueueMode::kHeap) return FrontierQueue<std::uint32_t>::heap();
    const Cost lower = bounds_.lower[index_of(p_)][origin_];
    if (lower == kInfinity) return FrontierQueue<std::uint32_t>::heap();  // unreachable; never used
    Cost upper;
    if (cfg_.enhanced) {
      const Cost cap = shared_.load(p_);
      upper = cap == kInfinity ? kInfinity : std::max(lower, cap - 1);
    } else {
      // Keys of simple paths never exceed lower + 2 * (sum of largest
      // out-arc primary weight per state).
      Cost span = 0;
      for (StateId s = 0; s < view_.num_states(); ++s) {
        Cost best = 0;
        for (ArcId a : view_.successors(s)) best = std::max(best, view_.cost(a)[p_]);
        span = sat_add(span, best);
      }
      upper = sat_add(lower, sat_add(span, span));
    }
    return FrontierQueue<std::uint32_t>::bucket(lower, upper);
  }

  Cost h_primary(StateId s) const noexcept { return bounds_.lower[index_of(p_)][s]; }
  Cost h_secondary(StateId s) const noexcept {
    return std::atomic_ref<Cost>(bounds_.lower[index_of(q_)][s]).load(std::memory_order_relaxed);
  }
  bool usable(StateId s) const noexcept { return h_primary(s) != kInfinity && h_secondary(s) != kInfinity; }

  // The target's secondary watermark is the shared secondary bound.
  Cost gmin_at(StateId s) const noexcept { return s == target_ ? shared_.load(q_) : gmin_[s]; }

  void set_gmin(const SearchNode& x) {
    if (x.state == target_) {
      lower_own_bound(x, x.g[q_]);
    } else {
      gmin_[x.state] = x.g[q_];
    }
  }

  void lower_own_bound(const SearchNode& x, Cost value) {
    const Cost prev = shared_.lower(q_, value);
    if (value < prev && observer_) {
      TraceEvent e{TraceEvent::Kind::kBoundUpdate, x.state, x.g, x.f};
      e.previous = prev;
      e.value = value;
      observer_(e);
    }
  }

  void tune(const SearchNode& x) {
    std::atomic_ref<Cost> slot(tuning_sink_[x.state]);
    const Cost prev = slot.load(std::memory_order_relaxed);
    const Cost value = std::max(prev, x.g[p_]);
    slot.store(value, std::memory_order_relaxed);
    ++metrics_.tuning_writes;
    if (observer_) {
      TraceEvent e{TraceEvent::Kind::kTune, x.state, x.g, x.f};
      e.previous = prev;
      e.value = value;
      observer_(e);
    }
  }

  void expand(const SearchNode& x, std::uint32_t slot, PathId pid) {
    ++metrics_.successor_expansions;
    emit(TraceEvent::Kind::kExpand, x);
    for (ArcId a : view_.successors(x.state)) {
      const StateId t = view_.head(a);
      const Cost hp = h_primary(t);
      const Cost hq = h_secondary(t);
      if (hp == kInfinity || hq == kInfinity) continue;

      SearchNode y;
      y.state = t;
      y.g = x.g + view_.cost(a);
      y.f[p_] = sat_add(y.g[p_], hp);
      y.f[q_] = sat_add(y.g[q_], hq);
      y.parent_arc = a;
      y.parent_path = pid;
      y.parent_slot = store_ ? SearchNode::kNoSlot : slot;

      if (y.g[q_] >= gmin_at(t) || y.f[q_] >= shared_.load(q_) ||
          (cfg_.enhanced && y.f[p_] >= shared_.load(p_))) {
        ++metrics_.pruned_at_generation;
        emit(TraceEvent::Kind::kPrunedAtGeneration, y);
        continue;
      }
      push(y);
      emit(TraceEvent::Kind::kGenerate, y);
    }
  }

  // The origin goes through the same bound test as every generated node; a
  // partner may already have closed the search.
  bool generate_origin() {
    SearchNode root;
    root.state = origin_;
    root.f[p_] = h_primary(origin_);
    root.f[q_] = h_secondary(origin_);
    if (root.f[q_] >= shared_.load(q_) || (cfg_.enhanced && root.f[p_] >= shared_.load(p_))) {
      ++metrics_.pruned_at_generation;
      emit(TraceEvent::Kind::kPrunedAtGeneration, root);
      return false;
    }
    push(root);
    emit(TraceEvent::Kind::kGenerate, root);
    return true;
  }

  void push(const SearchNode& y) {
    const std::uint32_t slot = pool_.acquire(y);
    open_.push({y.f[p_], y.f[q_]}, slot);
    metrics_.peak_open = std::max(metrics_.peak_open, open_.size());
  }

  void emit(TraceEvent::Kind kind, const SearchNode& x) const {
    if (observer_) observer_(TraceEvent{kind, x.state, x.g, x.f});
  }

  EngineConfig cfg_;
  Objective p_;
  Objective q_;
  GraphView view_;
  StateId origin_;
  StateId target_;
  DirectionalBounds& bounds_;
  SharedBounds& shared_;
  std::span<Cost> tuning_sink_;
  TraceObserver observer_;

  FrontierQueue<std::uint32_t> open_;
  NodePool pool_;
  std::optional<PathStore> store_;
  std::vector<Cost> gmin_;
  SolutionList sol_;
  SearchMetrics metrics_;
  bool origin_generated_ = false;
  bool finished_ = false;
};

}  // namespace biobj
