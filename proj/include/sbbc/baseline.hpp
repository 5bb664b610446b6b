#pragma once

#include "sbbc/graph.hpp"
#include "sbbc/report.hpp"

namespace sbbc {

// Enumerate-then-filter counter in the BCList++ style: depth-first extension
// of a descending-priority anchor-side prefix with candidate/common
// intersection, pruned only on |common| < q and on remaining candidate
// capacity. At depth p every q-subset of the common set is materialized as an
// explicit biclique and balance-tested (rank-1 check, O(pq) per biclique),
// so bicliques_materialized always equals the unsigned (p,q)-biclique count —
// the enumeration cost the sign-aware counters avoid.
CountReport count_balanced_baseline(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                    const RunOptions& opts = {});

}  // namespace sbbc
