#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "sbbc/graph.hpp"
#include "sbbc/report.hpp"

namespace sbbc {

// Type code kappa of a signed wedge <anchor, w_1..w_k, center>: bit i-1 is 0
// ("s") when sign(anchor, center) equals sign(center, w_i) and 1 ("d")
// otherwise. Invariant under a global sign flip, since it only compares
// signs for equality.
//
// Throws MissingEdgeError when the center is not adjacent to the anchor or to
// some tail vertex. Tail length is limited to 64 by the bit packing.
uint64_t wedge_type(const SignedBipartiteGraph& g, Side anchor_side, uint32_t anchor,
                    uint32_t center, std::span<const uint32_t> tail);

// "sd..." rendering, c_1 first.
std::string wedge_type_string(uint64_t kappa, uint32_t tail_len);

// Wedge-centric balanced (p,q)-biclique counter. Anchors on the smaller
// partition; per anchor, classifies every signed p-wedge
// <anchor, w_1..w_{p-1}, v> with rho(anchor) > rho(w_1) > ... > rho(w_{p-1})
// into a (kappa, tail) bucket, then adds C(bucket, q) per bucket. Buckets are
// scoped to one anchor and recycled between anchors.
CountReport count_balanced_bbwc(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                const RunOptions& opts = {});

}  // namespace sbbc
