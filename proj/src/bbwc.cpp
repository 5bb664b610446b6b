#include "sbbc/bbwc.hpp"

#include <algorithm>
#include <unordered_map>

#include "detail.hpp"
#include "sbbc/bigcount.hpp"

namespace sbbc {

uint64_t wedge_type(const SignedBipartiteGraph& g, Side anchor_side, uint32_t anchor,
                    uint32_t center, std::span<const uint32_t> tail) {
  if (tail.size() > 64) throw InvalidArgumentError("wedge tails longer than 64 are unsupported");
  auto sign_of = [&](uint32_t same_side_vertex) {
    auto s = anchor_side == Side::LeftU ? g.edge_sign(same_side_vertex, center)
                                        : g.edge_sign(center, same_side_vertex);
    if (!s)
      throw MissingEdgeError("wedge center " + std::to_string(center) +
                             " is not adjacent to vertex " + std::to_string(same_side_vertex));
    return *s;
  };
  Sign anchor_sign = sign_of(anchor);
  uint64_t kappa = 0;
  for (size_t i = 0; i < tail.size(); ++i)
    if (sign_of(tail[i]) != anchor_sign) kappa |= uint64_t{1} << i;
  return kappa;
}

std::string wedge_type_string(uint64_t kappa, uint32_t tail_len) {
  std::string out;
  out.reserve(tail_len);
  for (uint32_t i = 0; i < tail_len; ++i)
    out.push_back((kappa >> i) & 1 ? 'd' : 's');
  return out;
}

namespace {

struct VecKeyHash {
  size_t operator()(const std::vector<uint32_t>& key) const {
    uint64_t h = 0x811c9dc5;
    for (uint32_t x : key) h = mix64(h ^ x);
    return static_cast<size_t>(h);
  }
};

struct BbwcLane {
  BigCount total;
  uint64_t wedges = 0;
  BinomialCache choose;
  detail::FlatCounter64 packed_buckets;
  std::unordered_map<std::vector<uint32_t>, uint32_t, VecKeyHash> wide_buckets;
  std::vector<uint32_t> wide_key;

  void merge_into(CountReport& r) {
    r.balanced_count += total;
    r.work.wedges += wedges;
  }
};

}  // namespace

CountReport count_balanced_bbwc(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                const RunOptions& opts) {
  require_pq(p, q);
  if (std::max(p, q) > 65)
    throw InvalidArgumentError("p and q above 65 are unsupported (type codes use p-1 bits)");

  CountReport report;
  report.algorithm = "bbwc";
  report.p = p;
  report.q = q;

  Side anchor_side = detail::resolve_anchor_side(g, opts.anchor_side);
  report.anchor_side = anchor_side;
  Side center_side = opposite(anchor_side);
  uint32_t anchor_count = g.side_count(anchor_side);
  // p binds to LeftU, q to RightV; anchoring on RightV swaps the roles.
  uint32_t tail_len = (anchor_side == Side::LeftU ? p : q) - 1;
  uint32_t completion_size = anchor_side == Side::LeftU ? q : p;
  if (opts.collect_per_anchor) report.per_anchor.assign(anchor_count, AnchorWork{});

  // A bucket key is tail_len vertex indices plus tail_len kappa bits; it fits
  // the fast packed path when that stays under 63 bits.
  uint32_t index_bits = 1;
  while ((uint64_t{1} << index_bits) < std::max<uint64_t>(anchor_count, 1)) ++index_bits;
  bool packed = tail_len * (index_bits + 1) <= 63;

  detail::anchor_loop<BbwcLane>(anchor_count, opts, report, [&](uint32_t anchor, BbwcLane& lane) {
    if (tail_len == 0) return;  // p or q below 2 is rejected above; defensive
    uint32_t anchor_rank = g.priority_rank(anchor_side, anchor);
    lane.packed_buckets.clear();
    lane.wide_buckets.clear();
    uint64_t anchor_wedges = 0;

    for (const auto& center : g.neighbors_desc(anchor_side, anchor)) {
      auto cands = detail::lower_priority_suffix(g.neighbors_desc(center_side, center.idx), g,
                                                 anchor_side, anchor_rank);
      if (cands.size() < tail_len) continue;
      Sign anchor_sign = center.sign;
      detail::for_each_combination(
          static_cast<uint32_t>(cands.size()), tail_len, [&](const uint32_t* sel, uint32_t k) {
            ++anchor_wedges;
            if (packed) {
              uint64_t key = 0;
              uint64_t kappa = 0;
              for (uint32_t i = 0; i < k; ++i) {
                const auto& w = cands[sel[i]];
                key = (key << index_bits) | w.idx;
                if (w.sign != anchor_sign) kappa |= uint64_t{1} << i;
              }
              lane.packed_buckets.bump((key << k) | kappa);
            } else {
              lane.wide_key.clear();
              uint64_t kappa = 0;
              for (uint32_t i = 0; i < k; ++i) {
                const auto& w = cands[sel[i]];
                lane.wide_key.push_back(w.idx);
                if (w.sign != anchor_sign) kappa |= uint64_t{1} << i;
              }
              lane.wide_key.push_back(static_cast<uint32_t>(kappa));
              lane.wide_key.push_back(static_cast<uint32_t>(kappa >> 32));
              ++lane.wide_buckets[lane.wide_key];
            }
          });
    }

    lane.wedges += anchor_wedges;
    if (!report.per_anchor.empty()) report.per_anchor[anchor].wedges = anchor_wedges;

    if (packed) {
      lane.packed_buckets.for_each([&](uint64_t, uint32_t completions) {
        if (completions >= completion_size)
          lane.total += lane.choose(completions, completion_size);
      });
    } else {
      for (const auto& [key, completions] : lane.wide_buckets)
        if (completions >= completion_size)
          lane.total += lane.choose(completions, completion_size);
    }
  });

  return report;
}

}  // namespace sbbc
