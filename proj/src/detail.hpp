#pragma once

// Internal enumeration / intersection helpers shared by the counters.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

#include "sbbc/graph.hpp"
#include "sbbc/report.hpp"
#include "sbbc/rng.hpp"

namespace sbbc::detail {

// Visit every k-combination of [0, n) in lexicographic order.
// f receives a pointer to k ascending indices.
template <class F>
void for_each_combination(uint32_t n, uint32_t k, F&& f) {
  if (k > n) return;
  if (k == 0) return;  // callers never need the empty combination
  std::vector<uint32_t> idx(k);
  for (uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx.data(), k);
    // advance rightmost index that can still move
    uint32_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    ++idx[i];
    for (uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Suffix of a descending-priority neighbor list holding strictly lower
// priority than `rank`. Ranks are unique, so the partition point is exact.
inline std::span<const SignedBipartiteGraph::Nbr> lower_priority_suffix(
    std::span<const SignedBipartiteGraph::Nbr> nbrs, const SignedBipartiteGraph& g, Side nbr_side,
    uint32_t rank) {
  auto it = std::partition_point(nbrs.begin(), nbrs.end(),
                                 [&](const SignedBipartiteGraph::Nbr& nb) {
                                   return g.priority_rank(nbr_side, nb.idx) >= rank;
                                 });
  return {it, nbrs.end()};
}

// out = a ∩ b over ascending-index Nbr lists, keeping a's signs.
inline void intersect_keep_first(std::span<const SignedBipartiteGraph::Nbr> a,
                                 std::span<const SignedBipartiteGraph::Nbr> b,
                                 std::vector<uint32_t>& out) {
  out.clear();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].idx < b[j].idx) {
      ++i;
    } else if (b[j].idx < a[i].idx) {
      ++j;
    } else {
      out.push_back(a[i].idx);
      ++i;
      ++j;
    }
  }
}

// out = sorted_vals ∩ b (plain indices vs Nbr list).
inline void intersect_indices(const std::vector<uint32_t>& vals,
                              std::span<const SignedBipartiteGraph::Nbr> b,
                              std::vector<uint32_t>& out) {
  out.clear();
  size_t i = 0, j = 0;
  while (i < vals.size() && j < b.size()) {
    if (vals[i] < b[j].idx) {
      ++i;
    } else if (b[j].idx < vals[i]) {
      ++j;
    } else {
      out.push_back(vals[i]);
      ++i;
      ++j;
    }
  }
}

// Smaller partition wins; ties anchor on the left side.
inline Side resolve_anchor_side(const SignedBipartiteGraph& g, AnchorSide pref) {
  switch (pref) {
    case AnchorSide::Left: return Side::LeftU;
    case AnchorSide::Right: return Side::RightV;
    default: return g.right_count() < g.left_count() ? Side::RightV : Side::LeftU;
  }
}

// Open-addressing u64 -> u32 tally, rebuilt cheaply between anchors. Keys must
// stay below 2^63 (all-ones is the empty sentinel). Iteration walks the
// insertion-order slot list, so draining is O(entries), not O(capacity).
class FlatCounter64 {
 public:
  explicit FlatCounter64(size_t initial_capacity = 1024) { rehash(initial_capacity); }

  uint32_t& bump(uint64_t key) {
    if (size_ + 1 > (mask_ + 1) - ((mask_ + 1) >> 2)) rehash((mask_ + 1) * 2);
    size_t i = mix64(key) & mask_;
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
    if (keys_[i] == kEmpty) {
      keys_[i] = key;
      vals_[i] = 0;
      used_.push_back(i);
      ++size_;
    }
    return ++vals_[i];
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i : used_) f(keys_[i], vals_[i]);
  }

  size_t size() const { return size_; }

  void clear() {
    for (size_t i : used_) keys_[i] = kEmpty;
    used_.clear();
    size_ = 0;
  }

 private:
  static constexpr uint64_t kEmpty = ~uint64_t{0};

  void rehash(size_t capacity) {
    size_t cap = 16;
    while (cap < capacity) cap <<= 1;
    std::vector<uint64_t> old_keys = std::move(keys_);
    std::vector<uint32_t> old_vals = std::move(vals_);
    std::vector<size_t> old_used = std::move(used_);
    keys_.assign(cap, kEmpty);
    vals_.assign(cap, 0);
    used_.clear();
    used_.reserve(cap / 2);
    mask_ = cap - 1;
    size_ = 0;
    for (size_t i : old_used) {
      size_t j = mix64(old_keys[i]) & mask_;
      while (keys_[j] != kEmpty) j = (j + 1) & mask_;
      keys_[j] = old_keys[i];
      vals_[j] = old_vals[i];
      used_.push_back(j);
      ++size_;
    }
  }

  std::vector<uint64_t> keys_;
  std::vector<uint32_t> vals_;
  std::vector<size_t> used_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

// Runs fn(anchor, lane) over every anchor index in [0, n), optionally across
// threads, with cooperative deadline checks every check_interval anchors.
// Lane results merge by exact integer addition, so totals are independent of
// schedule and lane count. Lane is default-constructed per thread and must
// provide merge_into(Target&).
template <class Lane, class Target, class Fn>
void anchor_loop(uint32_t n, const RunOptions& opts, Target& target, Fn&& fn) {
  uint32_t threads = std::max<uint32_t>(1, opts.threads);
  threads = std::min<uint32_t>(threads, std::max<uint32_t>(1, n));
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (opts.time_limit) deadline = std::chrono::steady_clock::now() + *opts.time_limit;
  uint32_t interval = std::max<uint32_t>(1, opts.check_interval);

  std::atomic<uint32_t> next{0};
  std::atomic<bool> expired{false};
  std::vector<Lane> lanes(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto worker = [&](uint32_t lane_id) {
    Lane& lane = lanes[lane_id];
    try {
      uint32_t since_check = 0;
      while (true) {
        uint32_t a = next.fetch_add(1, std::memory_order_relaxed);
        if (a >= n) break;
        if (deadline && ++since_check >= interval) {
          since_check = 0;
          if (std::chrono::steady_clock::now() > *deadline) {
            expired.store(true, std::memory_order_relaxed);
            break;
          }
        }
        if (expired.load(std::memory_order_relaxed)) break;
        fn(a, lane);
      }
    } catch (...) {
      errors[lane_id] = std::current_exception();
      expired.store(true, std::memory_order_relaxed);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (uint32_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  if (expired.load())
    throw TimeLimitError("time limit exceeded");
  for (auto& lane : lanes) lane.merge_into(target);
}

}  // namespace sbbc::detail
