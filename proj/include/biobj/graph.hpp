#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "biobj/types.hpp"

namespace biobj {

struct Arc {
  StateId from = 0;
  StateId to = 0;
  CostPair cost;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed bi-objective graph in CSR form with both forward and reverse
/// adjacency. Immutable after construction.
class BiGraph {
 public:
  BiGraph() = default;

  /// Builds the graph from an arc list. Self-loops are dropped, parallel arcs
  /// are kept.
  BiGraph(std::size_t num_states, std::span<const Arc> arcs) : num_states_(num_states) {
    arcs_.reserve(arcs.size());
    for (const Arc& a : arcs) {
      if (a.from >= num_states || a.to >= num_states) {
        throw RangeError("arc endpoint outside [0, " + std::to_string(num_states) + ")");
      }
      if (a.from != a.to) arcs_.push_back(a);
    }
    build_index(out_offsets_, out_arcs_, [](const Arc& a) { return a.from; });
    build_index(in_offsets_, in_arcs_, [](const Arc& a) { return a.to; });
  }

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }

  const Arc& arc(ArcId id) const noexcept { return arcs_[id]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const ArcId> out_arcs(StateId s) const noexcept {
    return {out_arcs_.data() + out_offsets_[s], out_arcs_.data() + out_offsets_[s + 1]};
  }
  std::span<const ArcId> in_arcs(StateId s) const noexcept {
    return {in_arcs_.data() + in_offsets_[s], in_arcs_.data() + in_offsets_[s + 1]};
  }

 private:
  template <typename Key>
  void build_index(std::vector<std::size_t>& offsets, std::vector<ArcId>& ids, Key key) const {
    offsets.assign(num_states_ + 1, 0);
    for (const Arc& a : arcs_) ++offsets[key(a) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    ids.resize(arcs_.size());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (ArcId i = 0; i < arcs_.size(); ++i) ids[fill[key(arcs_[i])]++] = i;
  }

  std::size_t num_states_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<ArcId> out_arcs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<ArcId> in_arcs_;
};

/// A (possibly reversed) view of a BiGraph. In a reversed view the successors
/// of s are the predecessors of s in the underlying graph; arc ids and costs
/// are shared with the underlying graph.
class GraphView {
 public:
  GraphView() = default;
  explicit GraphView(const BiGraph& g, bool reversed = false) : g_(&g), reversed_(reversed) {}

  const BiGraph& graph() const noexcept { return *g_; }
  bool reversed() const noexcept { return reversed_; }
  std::size_t num_states() const noexcept { return g_->num_states(); }

  /// Arcs leaving s in this view.
  std::span<const ArcId> successors(StateId s) const noexcept {
    return reversed_ ? g_->in_arcs(s) : g_->out_arcs(s);
  }
  /// Arcs entering s in this view.
  std::span<const ArcId> predecessors(StateId s) const noexcept {
    return reversed_ ? g_->out_arcs(s) : g_->in_arcs(s);
  }

  /// Where an arc starts / ends when traversed in this view.
  StateId tail(ArcId a) const noexcept { return reversed_ ? g_->arc(a).to : g_->arc(a).from; }
  StateId head(ArcId a) const noexcept { return reversed_ ? g_->arc(a).from : g_->arc(a).to; }
  const CostPair& cost(ArcId a) const noexcept { return g_->arc(a).cost; }

 private:
  const BiGraph* g_ = nullptr;
  bool reversed_ = false;
};

inline GraphView reverse_view(const GraphView& v) { return GraphView(v.graph(), !v.reversed()); }

}  // namespace biobj
