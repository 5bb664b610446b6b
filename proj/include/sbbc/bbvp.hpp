#pragma once

#include <cstdint>
#include <vector>

#include "sbbc/graph.hpp"
#include "sbbc/report.hpp"

namespace sbbc {

// Per-anchor pruning state: shared-neighbor counts over the anchor's 2-hop
// neighborhood (restricted to strictly lower priority), the candidate set
// passing the cnt >= q gate, and — built lazily once the |C| >= p-1 gate
// passes — the common-neighbor list of each candidate.
struct AnchorContext {
  // (vertex, |Γ(anchor) ∩ Γ(vertex)|) for every 2-hop co-vertex reached.
  std::vector<std::pair<uint32_t, uint32_t>> shared_counts;
  // Vertices with shared count >= q, sorted by descending priority.
  std::vector<uint32_t> candidates;
  // lists[i] = Γ(anchor) ∩ Γ(candidates[i]), ascending vertex index.
  std::vector<std::vector<uint32_t>> lists;
  bool lists_built = false;
};

AnchorContext build_anchor_context(const SignedBipartiteGraph& g, Side anchor_side,
                                   uint32_t anchor, uint32_t q);

void build_candidate_lists(const SignedBipartiteGraph& g, Side anchor_side, uint32_t anchor,
                           AnchorContext& ctx);

// Vertex-based pruning balanced (p,q)-biclique counter. Anchors on the
// smaller partition; per anchor, filters 2-hop co-vertices by shared-neighbor
// count, enumerates descending-priority (p-1)-subsets A of the candidate set,
// intersects their common-neighbor lists smallest-first with early abort, and
// tallies surviving completions by wedge type before adding C(tally, q).
CountReport count_balanced_bbvp(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                const RunOptions& opts = {});

}  // namespace sbbc
