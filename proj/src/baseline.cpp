#include "sbbc/baseline.hpp"

#include <algorithm>

#include "detail.hpp"
#include "sbbc/bigcount.hpp"
#include "sbbc/oracle.hpp"

namespace sbbc {

namespace {

struct BaselineLane {
  BigCount total;
  WorkCounters work;
  BinomialCache choose;
  std::vector<uint32_t> cnt;
  std::vector<uint32_t> touched;
  std::vector<uint32_t> chosen;
  // per-depth scratch, so recursion never reallocates
  std::vector<std::vector<uint32_t>> cands;
  std::vector<std::vector<uint32_t>> common;

  void merge_into(CountReport& r) {
    r.balanced_count += total;
    r.work += work;
  }
};

struct BaselineRun {
  const SignedBipartiteGraph& g;
  Side anchor_side;
  uint32_t anchor_size;      // vertices taken from the anchor side
  uint32_t completion_size;  // vertices taken from the opposite side

  void materialize(BaselineLane& lane) const {
    const auto& common = lane.common[anchor_size - 1];
    if (common.size() < completion_size) return;
    std::vector<uint32_t> anchor_sorted = lane.chosen;
    std::sort(anchor_sorted.begin(), anchor_sorted.end());
    detail::for_each_combination(
        static_cast<uint32_t>(common.size()), completion_size,
        [&](const uint32_t* sel, uint32_t k) {
          std::vector<uint32_t> completion(k);
          for (uint32_t j = 0; j < k; ++j) completion[j] = common[sel[j]];
          Biclique b = anchor_side == Side::LeftU
                           ? Biclique::from_graph(g, anchor_sorted, std::move(completion))
                           : Biclique::from_graph(g, std::move(completion), anchor_sorted);
          ++lane.work.bicliques_materialized;
          if (biclique_balanced_rank1(b))
            lane.total += BigCount(1);
          else
            ++lane.work.bicliques_rejected;
        });
  }

  void extend(BaselineLane& lane, uint32_t depth) const {
    if (depth == anchor_size) {
      materialize(lane);
      return;
    }
    const auto& cands = lane.cands[depth];
    for (size_t i = 0; i < cands.size(); ++i) {
      if (depth + (cands.size() - i) < anchor_size) break;  // suffix can no longer fill
      uint32_t x = cands[i];
      auto& next_common = lane.common[depth];
      detail::intersect_indices(lane.common[depth - 1], g.neighbors_by_index(anchor_side, x),
                                next_common);
      ++lane.work.intersections;
      if (next_common.size() < completion_size) continue;
      lane.chosen[depth] = x;
      auto& next_cands = lane.cands[depth + 1];
      next_cands.assign(cands.begin() + static_cast<ptrdiff_t>(i) + 1, cands.end());
      extend(lane, depth + 1);
    }
  }
};

}  // namespace

CountReport count_balanced_baseline(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                    const RunOptions& opts) {
  require_pq(p, q);

  CountReport report;
  report.algorithm = "baseline";
  report.p = p;
  report.q = q;

  Side anchor_side = detail::resolve_anchor_side(g, opts.anchor_side);
  report.anchor_side = anchor_side;
  uint32_t anchor_count = g.side_count(anchor_side);
  BaselineRun run{g, anchor_side, anchor_side == Side::LeftU ? p : q,
                  anchor_side == Side::LeftU ? q : p};

  detail::anchor_loop<BaselineLane>(
      anchor_count, opts, report, [&](uint32_t anchor, BaselineLane& lane) {
        if (lane.cnt.empty()) {
          lane.cnt.assign(anchor_count, 0);
          lane.chosen.assign(run.anchor_size, 0);
          lane.cands.resize(run.anchor_size + 1);
          lane.common.resize(run.anchor_size);
        }
        if (g.degree(anchor_side, anchor) < run.completion_size) return;

        // Depth-1 frame: common = Γ(anchor); candidates = lower-priority
        // vertices sharing at least one neighbor, descending priority.
        lane.chosen[0] = anchor;
        auto& common0 = lane.common[0];
        common0.clear();
        for (const auto& nb : g.neighbors_by_index(anchor_side, anchor))
          common0.push_back(nb.idx);

        lane.touched.clear();
        uint32_t anchor_rank = g.priority_rank(anchor_side, anchor);
        Side center_side = opposite(anchor_side);
        for (const auto& center : g.neighbors_desc(anchor_side, anchor)) {
          auto lower = detail::lower_priority_suffix(g.neighbors_desc(center_side, center.idx),
                                                     g, anchor_side, anchor_rank);
          for (const auto& w : lower) {
            if (lane.cnt[w.idx]++ == 0) lane.touched.push_back(w.idx);
          }
        }
        auto& cands1 = lane.cands[1];
        cands1.clear();
        for (uint32_t w : lane.touched) {
          cands1.push_back(w);
          lane.cnt[w] = 0;
        }
        std::sort(cands1.begin(), cands1.end(), [&](uint32_t a, uint32_t b) {
          return g.priority_rank(anchor_side, a) > g.priority_rank(anchor_side, b);
        });

        run.extend(lane, 1);
      });

  return report;
}

}  // namespace sbbc
