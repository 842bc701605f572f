#pragma once

#include <algorithm>
#include <vector>

#include "biobj/heuristics.hpp"

namespace biobj {

/// Compact backtracking storage for one search.
///
/// Each state owns an append-only list of entries, one per expansion of that
/// state. Entry k of state s holds the incoming arc used by the k-th expanded
/// path to s and the 1-based index of the parent path inside the parent
/// state's list. The search origin is recorded with no arc and path id 0.
/// Parent states are recovered from the arc, so an entry is two 32-bit words.
class PathStore {
 public:
  struct Entry {
    ArcId arc = kNoArc;
    PathId parent_path = 0;
  };

  PathStore() = default;
  explicit PathStore(const GraphView& view) : view_(view), entries_(view.num_states()) {}

  /// Appends an entry for `state` and returns its 1-based path id.
  PathId record(StateId state, ArcId parent_arc, PathId parent_path) {
    if (parent_arc == kNoArc) {
      if (parent_path != 0) throw ReconstructionError("origin entry with a parent path id");
    } else {
      const StateId parent = view_.tail(parent_arc);
      if (view_.head(parent_arc) != state) throw ReconstructionError("arc does not enter state");
      if (parent_path == 0 || parent_path > entries_[parent].size()) {
        throw ReconstructionError("dangling parent path id " + std::to_string(parent_path) + " at state " +
                                  std::to_string(parent));
      }
    }
    entries_[state].push_back({parent_arc, parent_path});
    ++total_;
    return static_cast<PathId>(entries_[state].size());
  }

  std::span<const Entry> entries(StateId s) const noexcept { return entries_[s]; }
  std::size_t total_entries() const noexcept { return total_; }

  /// Parent state of entry `path` of `s`, or kNoState for the origin.
  StateId parent_state(StateId s, PathId path) const {
    const Entry& e = entries_.at(s).at(path - 1);
    return e.arc == kNoArc ? kNoState : view_.tail(e.arc);
  }

  /// States origin, ..., s (in search orientation). When s is not the search
  /// target the complementary tree walk s -> target is appended, so `suffix`
  /// is then required.
  std::vector<StateId> reconstruct(StateId s, PathId path, StateId target,
                                   const SPTree* suffix = nullptr) const {
    if (s != target && suffix == nullptr) {
      throw ReconstructionError("state " + std::to_string(s) + " is not the target and no suffix tree given");
    }
    std::vector<StateId> seq;
    StateId cur = s;
    PathId pid = path;
    while (true) {
      if (pid == 0 || pid > entries_.at(cur).size()) {
        throw ReconstructionError("path id " + std::to_string(pid) + " not recorded at state " +
                                  std::to_string(cur));
      }
      if (seq.size() > total_) throw ReconstructionError("backtracking does not terminate");
      seq.push_back(cur);
      const Entry& e = entries_[cur][pid - 1];
      if (e.arc == kNoArc) break;
      cur = view_.tail(e.arc);
      pid = e.parent_path;
    }
    std::reverse(seq.begin(), seq.end());
    if (s != target) {
      const auto tail = suffix->walk(view_.graph(), s);
      seq.insert(seq.end(), tail.begin() + 1, tail.end());
    }
    return seq;
  }

 private:
  GraphView view_;
  std::vector<std::vector<Entry>> entries_;
  std::size_t total_ = 0;
};

}  // namespace biobj
