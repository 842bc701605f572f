#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "biobj/types.hpp"

namespace biobj {

enum class QueueMode : std::uint8_t { kBucket, kHeap };

/// Priority key of an Open-list entry: (primary f, secondary f).
struct FrontierKey {
  Cost primary = 0;
  Cost secondary = 0;

  friend constexpr auto operator<=>(const FrontierKey&, const FrontierKey&) = default;
};

/// Open list for the BOA* family.
///
/// Bucket mode keeps one unordered bucket per primary-cost unit over a range
/// [lower, upper] fixed at construction. Pops return an element of minimal
/// primary key; the secondary key is ignored. Keys must be inserted
/// monotonically (never below the current minimum), which holds for A* with
/// a consistent heuristic. Bucket storage grows lazily up to `upper`.
///
/// Heap mode is a binary heap ordered lexicographically on (primary,
/// secondary); ties beyond that are arbitrary.
template <typename T>
class FrontierQueue {
 public:
  static FrontierQueue bucket(Cost lower, Cost upper) {
    if (upper < lower) throw RangeError("bucket range upper < lower");
    FrontierQueue q(QueueMode::kBucket);
    q.lower_ = lower;
    q.upper_ = upper;
    return q;
  }
  static FrontierQueue heap() { return FrontierQueue(QueueMode::kHeap); }

  QueueMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Cost lower() const noexcept { return lower_; }
  Cost upper() const noexcept { return upper_; }

  void push(FrontierKey key, T value) {
    if (mode_ == QueueMode::kHeap) {
      heap_.push(Entry{key, seq_++, std::move(value)});
    } else {
      if (key.primary < lower_ || key.primary > upper_) {
        throw RangeError("bucket key " + std::to_string(key.primary) + " outside [" +
                         std::to_string(lower_) + ", " + std::to_string(upper_) + "]");
      }
      const std::size_t idx = static_cast<std::size_t>(key.primary - lower_);
      if (idx < cursor_) {
        throw RangeError("bucket key " + std::to_string(key.primary) +
                         " below current minimum (non-monotone insertion)");
      }
      if (idx >= buckets_.size()) buckets_.resize(idx + 1);
      buckets_[idx].push_back(Item{key, std::move(value)});
    }
    ++size_;
  }

  /// Removes and returns a minimal element, or nullopt when exhausted.
  std::optional<std::pair<FrontierKey, T>> pop_min() {
    if (size_ == 0) return std::nullopt;
    --size_;
    if (mode_ == QueueMode::kHeap) {
      Entry top = heap_.top();
      heap_.pop();
      return std::pair{top.key, std::move(top.value)};
    }
    while (buckets_[cursor_].empty()) ++cursor_;
    Item it = std::move(buckets_[cursor_].back());
    buckets_[cursor_].pop_back();
    return std::pair{it.key, std::move(it.value)};
  }

 private:
  explicit FrontierQueue(QueueMode mode) : mode_(mode) {}

  struct Item {
    FrontierKey key;
    T value;
  };
  struct Entry {
    FrontierKey key;
    std::uint64_t seq;
    T value;
    // std::priority_queue is a max-heap; invert for min-first.
    bool operator<(const Entry& o) const noexcept {
      if (key != o.key) return o.key < key;
      return o.seq < seq;
    }
  };

  QueueMode mode_;
  std::size_t size_ = 0;

  Cost lower_ = 0;
  Cost upper_ = 0;
  std::size_t cursor_ = 0;
  std::vector<std::vector<Item>> buckets_;

  std::uint64_t seq_ = 0;
  std::priority_queue<Entry> heap_;
};

}  // namespace biobj
