#include "sbbc/bbvp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "detail.hpp"
#include "sbbc/bigcount.hpp"

namespace sbbc {

namespace {

// One entry of an L-list: a completion vertex with the two signs needed for
// type classification carried along, so the hot loops never touch the edge
// hash.
struct LEntry {
  uint32_t v;
  Sign anchor_sign;     // sign(anchor, v)
  Sign candidate_sign;  // sign(w, v)
};

struct Accum {
  uint32_t v;
  Sign anchor_sign;
  uint64_t kappa;
};

// cnt[w] = |Γ(anchor) ∩ Γ(w)| for every w reached by a 2-hop walk with
// rho(w) < rho(anchor); touched lists which cells are live.
void tally_coneighbors(const SignedBipartiteGraph& g, Side anchor_side, uint32_t anchor,
                       std::vector<uint32_t>& cnt, std::vector<uint32_t>& touched) {
  uint32_t anchor_rank = g.priority_rank(anchor_side, anchor);
  Side center_side = opposite(anchor_side);
  for (const auto& center : g.neighbors_desc(anchor_side, anchor)) {
    auto lower = detail::lower_priority_suffix(g.neighbors_desc(center_side, center.idx), g,
                                               anchor_side, anchor_rank);
    for (const auto& w : lower) {
      if (cnt[w.idx]++ == 0) touched.push_back(w.idx);
    }
  }
}

// L[w] with signs carried from both endpoints; ascending v.
void build_list(const SignedBipartiteGraph& g, Side anchor_side, uint32_t anchor, uint32_t w,
                std::vector<LEntry>& out) {
  out.clear();
  auto a = g.neighbors_by_index(anchor_side, anchor);
  auto b = g.neighbors_by_index(anchor_side, w);
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].idx < b[j].idx) {
      ++i;
    } else if (b[j].idx < a[i].idx) {
      ++j;
    } else {
      out.push_back({a[i].idx, a[i].sign, b[j].sign});
      ++i;
      ++j;
    }
  }
}

struct BbvpLane {
  BigCount total;
  WorkCounters work;
  BinomialCache choose;
  std::vector<uint32_t> cnt;
  std::vector<uint32_t> touched;
  std::vector<uint32_t> cand;
  std::vector<std::vector<LEntry>> lists;
  std::vector<Accum> acc, acc_next;
  std::vector<uint32_t> type_tally;    // indexed by kappa (small tails)
  std::vector<uint64_t> types_touched;
  // pair fast path: L-lists as bitmasks over positions in Γ(anchor)
  std::vector<uint32_t> slot;      // opposite-side vertex -> position in Γ(anchor)
  std::vector<uint64_t> masks;     // per candidate: [membership words | sign-diff words]
  std::vector<uint64_t> neg_mask;  // positions where sign(anchor, v) is Negative

  void merge_into(CountReport& r) {
    r.balanced_count += total;
    r.work += work;
  }
};

constexpr uint32_t kNoSlot = ~uint32_t{0};
// Above this anchor degree the per-pair mask words outweigh short-list merges.
constexpr uint32_t kMaskDegreeCap = 512;

}  // namespace

AnchorContext build_anchor_context(const SignedBipartiteGraph& g, Side anchor_side,
                                   uint32_t anchor, uint32_t q) {
  AnchorContext ctx;
  std::vector<uint32_t> cnt(g.side_count(anchor_side), 0);
  std::vector<uint32_t> touched;
  tally_coneighbors(g, anchor_side, anchor, cnt, touched);
  std::sort(touched.begin(), touched.end());
  for (uint32_t w : touched) {
    ctx.shared_counts.push_back({w, cnt[w]});
    if (cnt[w] >= q) ctx.candidates.push_back(w);
  }
  std::sort(ctx.candidates.begin(), ctx.candidates.end(), [&](uint32_t a, uint32_t b) {
    return g.priority_rank(anchor_side, a) > g.priority_rank(anchor_side, b);
  });
  return ctx;
}

void build_candidate_lists(const SignedBipartiteGraph& g, Side anchor_side, uint32_t anchor,
                           AnchorContext& ctx) {
  ctx.lists.assign(ctx.candidates.size(), {});
  std::vector<LEntry> entries;
  for (size_t i = 0; i < ctx.candidates.size(); ++i) {
    build_list(g, anchor_side, anchor, ctx.candidates[i], entries);
    for (const LEntry& e : entries) ctx.lists[i].push_back(e.v);
  }
  ctx.lists_built = true;
}

CountReport count_balanced_bbvp(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                const RunOptions& opts) {
  require_pq(p, q);
  if (std::max(p, q) > 65)
    throw InvalidArgumentError("p and q above 65 are unsupported (type codes use p-1 bits)");

  CountReport report;
  report.algorithm = "bbvp";
  report.p = p;
  report.q = q;

  Side anchor_side = detail::resolve_anchor_side(g, opts.anchor_side);
  report.anchor_side = anchor_side;
  uint32_t anchor_count = g.side_count(anchor_side);
  uint32_t subset_size = (anchor_side == Side::LeftU ? p : q) - 1;
  uint32_t completion_size = anchor_side == Side::LeftU ? q : p;
  if (opts.collect_per_anchor) report.per_anchor.assign(anchor_count, AnchorWork{});

  bool flat_tally = subset_size <= 16;

  detail::anchor_loop<BbvpLane>(anchor_count, opts, report, [&](uint32_t anchor, BbvpLane& lane) {
    if (lane.cnt.empty()) lane.cnt.assign(anchor_count, 0);
    if (flat_tally && lane.type_tally.empty())
      lane.type_tally.assign(uint64_t{1} << subset_size, 0);

    // 2-hop shared-neighbor tally, then the cnt >= q gate.
    lane.touched.clear();
    tally_coneighbors(g, anchor_side, anchor, lane.cnt, lane.touched);
    lane.cand.clear();
    for (uint32_t w : lane.touched) {
      if (lane.cnt[w] >= completion_size) lane.cand.push_back(w);
      lane.cnt[w] = 0;
    }
    if (lane.cand.size() < subset_size) return;

    std::sort(lane.cand.begin(), lane.cand.end(), [&](uint32_t a, uint32_t b) {
      return g.priority_rank(anchor_side, a) > g.priority_rank(anchor_side, b);
    });

    uint64_t anchor_subsets = 0;
    size_t cand_count = lane.cand.size();
    uint32_t anchor_degree = g.degree(anchor_side, anchor);

    if (subset_size == 2 && anchor_degree <= kMaskDegreeCap) {
      // Bitmask pair path: Γ(anchor) positions index the bits, so each
      // candidate list is `words` machine words and a subset's common
      // neighborhood plus its four type-code tallies come out of AND and
      // popcount alone.
      uint32_t words = (anchor_degree + 63) / 64;
      if (lane.slot.empty()) lane.slot.assign(g.side_count(opposite(anchor_side)), kNoSlot);
      lane.neg_mask.assign(words, 0);
      auto anchor_nbrs = g.neighbors_by_index(anchor_side, anchor);
      for (uint32_t i = 0; i < anchor_degree; ++i) {
        lane.slot[anchor_nbrs[i].idx] = i;
        if (anchor_nbrs[i].sign == Sign::Negative)
          lane.neg_mask[i >> 6] |= uint64_t{1} << (i & 63);
      }

      lane.masks.assign(cand_count * 2 * words, 0);
      for (size_t c = 0; c < cand_count; ++c) {
        uint64_t* all = lane.masks.data() + c * 2 * words;
        uint64_t* diff = all + words;
        for (const auto& nb : g.neighbors_by_index(anchor_side, lane.cand[c])) {
          uint32_t pos = lane.slot[nb.idx];
          if (pos == kNoSlot) continue;
          uint64_t bit = uint64_t{1} << (pos & 63);
          all[pos >> 6] |= bit;
          bool anchor_negative = (lane.neg_mask[pos >> 6] >> (pos & 63)) & 1;
          if ((nb.sign == Sign::Negative) != anchor_negative) diff[pos >> 6] |= bit;
        }
        ++lane.work.intersections;
      }
      for (const auto& nb : anchor_nbrs) lane.slot[nb.idx] = kNoSlot;

      for (size_t i = 0; i + 1 < cand_count; ++i) {
        const uint64_t* all_i = lane.masks.data() + i * 2 * words;
        const uint64_t* diff_i = all_i + words;
        for (size_t j = i + 1; j < cand_count; ++j) {
          ++anchor_subsets;
          ++lane.work.intersections;
          const uint64_t* all_j = lane.masks.data() + j * 2 * words;
          const uint64_t* diff_j = all_j + words;
          uint32_t t_size = 0, di = 0, dj = 0, dd = 0;
          for (uint32_t w = 0; w < words; ++w) {
            uint64_t common = all_i[w] & all_j[w];
            t_size += std::popcount(common);
            uint64_t ci = diff_i[w] & common;
            uint64_t cj = diff_j[w] & common;
            di += std::popcount(ci);
            dj += std::popcount(cj);
            dd += std::popcount(ci & cj);
          }
          if (t_size < completion_size) continue;
          // kappa bit 0 tracks the higher-priority candidate i, bit 1 j
          uint32_t x[4];
          x[3] = dd;
          x[1] = di - dd;
          x[2] = dj - dd;
          x[0] = t_size - x[1] - x[2] - x[3];
          for (uint32_t kappa = 0; kappa < 4; ++kappa)
            if (x[kappa] >= completion_size)
              lane.total += lane.choose(x[kappa], completion_size);
        }
      }

      lane.work.subsets += anchor_subsets;
      if (!report.per_anchor.empty()) report.per_anchor[anchor].subsets = anchor_subsets;
      return;
    }

    // L-lists only for survivors of both gates.
    if (lane.lists.size() < lane.cand.size()) lane.lists.resize(lane.cand.size());
    for (size_t i = 0; i < lane.cand.size(); ++i) {
      build_list(g, anchor_side, anchor, lane.cand[i], lane.lists[i]);
      ++lane.work.intersections;
      assert(lane.lists[i].size() >= completion_size);
    }

    if (subset_size == 1) {
      // T = L[w] directly; the one-bit type splits it in two.
      for (size_t i = 0; i < cand_count; ++i) {
        ++anchor_subsets;
        uint32_t same = 0, diff = 0;
        for (const LEntry& e : lane.lists[i])
          e.candidate_sign == e.anchor_sign ? ++same : ++diff;
        if (same >= completion_size) lane.total += lane.choose(same, completion_size);
        if (diff >= completion_size) lane.total += lane.choose(diff, completion_size);
      }
    } else if (subset_size == 2) {
      // Pair fast path: one merge per subset, four possible type codes.
      for (size_t i = 0; i + 1 < cand_count; ++i) {
        const auto& la = lane.lists[i];
        for (size_t j = i + 1; j < cand_count; ++j) {
          ++anchor_subsets;
          ++lane.work.intersections;
          const auto& lb = lane.lists[j];
          uint32_t x[4] = {0, 0, 0, 0};
          size_t ia = 0, ib = 0;
          while (ia < la.size() && ib < lb.size()) {
            if (la[ia].v < lb[ib].v) {
              ++ia;
            } else if (lb[ib].v < la[ia].v) {
              ++ib;
            } else {
              uint32_t kappa = (la[ia].candidate_sign != la[ia].anchor_sign ? 1u : 0u) |
                               (lb[ib].candidate_sign != lb[ib].anchor_sign ? 2u : 0u);
              ++x[kappa];
              ++ia;
              ++ib;
            }
          }
          if (x[0] + x[1] + x[2] + x[3] < completion_size) continue;
          for (uint32_t kappa = 0; kappa < 4; ++kappa)
            if (x[kappa] >= completion_size) lane.total += lane.choose(x[kappa], completion_size);
        }
      }
    } else {
      detail::for_each_combination(
          static_cast<uint32_t>(cand_count), subset_size, [&](const uint32_t* sel, uint32_t k) {
            ++anchor_subsets;
            // Fold the k lists in increasing-size order; abort as soon as
            // fewer than completion_size survivors remain. kappa bit i tracks
            // position i in the descending-priority subset regardless of
            // fold order.
            uint32_t order[64];
            for (uint32_t i = 0; i < k; ++i) {
              uint32_t pos = i;
              while (pos > 0 && lane.lists[sel[order[pos - 1]]].size() >
                                    lane.lists[sel[i]].size()) {
                order[pos] = order[pos - 1];
                --pos;
              }
              order[pos] = i;
            }

            lane.acc.clear();
            {
              uint64_t bit = uint64_t{1} << order[0];
              for (const LEntry& e : lane.lists[sel[order[0]]])
                lane.acc.push_back(
                    {e.v, e.anchor_sign, e.candidate_sign != e.anchor_sign ? bit : 0});
            }
            for (uint32_t step = 1; step < k && lane.acc.size() >= completion_size; ++step) {
              uint64_t pos = order[step];
              const auto& list = lane.lists[sel[pos]];
              lane.acc_next.clear();
              size_t i = 0, j = 0;
              while (i < lane.acc.size() && j < list.size()) {
                if (lane.acc[i].v < list[j].v) {
                  ++i;
                } else if (list[j].v < lane.acc[i].v) {
                  ++j;
                } else {
                  Accum e = lane.acc[i];
                  if (list[j].candidate_sign != e.anchor_sign) e.kappa |= uint64_t{1} << pos;
                  lane.acc_next.push_back(e);
                  ++i;
                  ++j;
                }
              }
              lane.acc.swap(lane.acc_next);
              ++lane.work.intersections;
            }
            if (lane.acc.size() < completion_size) return;

            // Type tally over T, then C(x[kappa], q) per type.
            if (flat_tally) {
              lane.types_touched.clear();
              for (const Accum& e : lane.acc) {
                if (lane.type_tally[e.kappa]++ == 0) lane.types_touched.push_back(e.kappa);
              }
              for (uint64_t kappa : lane.types_touched) {
                uint32_t x = lane.type_tally[kappa];
                lane.type_tally[kappa] = 0;
                if (x >= completion_size) lane.total += lane.choose(x, completion_size);
              }
            } else {
              std::sort(lane.acc.begin(), lane.acc.end(),
                        [](const Accum& a, const Accum& b) { return a.kappa < b.kappa; });
              size_t i = 0;
              while (i < lane.acc.size()) {
                size_t j = i;
                while (j < lane.acc.size() && lane.acc[j].kappa == lane.acc[i].kappa) ++j;
                if (j - i >= completion_size) lane.total += lane.choose(j - i, completion_size);
                i = j;
              }
            }
          });
    }

    lane.work.subsets += anchor_subsets;
    if (!report.per_anchor.empty()) report.per_anchor[anchor].subsets = anchor_subsets;
  });

  return report;
}

}  // namespace sbbc
