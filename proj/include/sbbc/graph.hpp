#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sbbc/types.hpp"

namespace sbbc {

struct GraphStats {
  uint32_t left_count = 0;
  uint32_t right_count = 0;
  uint64_t edge_count = 0;
  uint32_t max_degree = 0;
  std::vector<uint64_t> left_degree_histogram;   // index = degree
  std::vector<uint64_t> right_degree_histogram;
};

// Immutable signed bipartite graph. Construction validates the simple-graph
// invariant (duplicate (u,v) pairs are a hard error, even with equal signs)
// and precomputes, per side:
//   - the vertex priority rank realizing rho: rho(a) > rho(b) iff
//     deg(a) > deg(b), or deg(a) = deg(b) and id(a) > id(b);
//   - adjacency sorted by descending neighbor priority (drives the ordered
//     wedge/subset enumerations);
//   - adjacency sorted by ascending neighbor index (drives sorted-merge
//     intersections);
//   - an edge-keyed hash index for O(1) sign lookup.
// All queries are const and safe under concurrent readers.
class SignedBipartiteGraph {
 public:
  struct Nbr {
    uint32_t idx;
    Sign sign;
  };

  // Vertex counts inferred as 1 + max index per side (empty input -> 0/0).
  static SignedBipartiteGraph build(const std::vector<SignedEdge>& edges);
  // Explicit counts; trailing isolated vertices allowed.
  static SignedBipartiteGraph build(const std::vector<SignedEdge>& edges, uint32_t left_count,
                                    uint32_t right_count);

  uint32_t left_count() const { return counts_[0]; }
  uint32_t right_count() const { return counts_[1]; }
  uint32_t side_count(Side s) const { return counts_[static_cast<int>(s)]; }
  uint64_t edge_count() const { return edge_count_; }
  uint32_t max_degree() const { return max_degree_; }

  uint32_t degree(Side s, uint32_t v) const {
    const auto& off = sides_[static_cast<int>(s)].offsets;
    return static_cast<uint32_t>(off[v + 1] - off[v]);
  }

  // Higher rank value = higher priority. Ranks are a permutation of
  // [0, side_count) realizing rho.
  uint32_t priority_rank(Side s, uint32_t v) const {
    return sides_[static_cast<int>(s)].rank[v];
  }

  // Neighbors sorted by strictly descending priority of the neighbor.
  std::span<const Nbr> neighbors_desc(Side s, uint32_t v) const {
    const auto& sd = sides_[static_cast<int>(s)];
    return {sd.by_rank.data() + sd.offsets[v], sd.by_rank.data() + sd.offsets[v + 1]};
  }

  // Neighbors sorted by ascending vertex index.
  std::span<const Nbr> neighbors_by_index(Side s, uint32_t v) const {
    const auto& sd = sides_[static_cast<int>(s)];
    return {sd.by_index.data() + sd.offsets[v], sd.by_index.data() + sd.offsets[v + 1]};
  }

  // Sign of edge (u, v), or nullopt when absent. O(1) amortized.
  std::optional<Sign> edge_sign(uint32_t u, uint32_t v) const {
    auto it = edge_index_.find(edge_key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  // Edge list sorted by (u, v) ascending; the canonical serialization order.
  std::vector<SignedEdge> edges_sorted() const;

  GraphStats stats() const;

 private:
  struct SideData {
    std::vector<uint64_t> offsets;  // size count+1
    std::vector<Nbr> by_rank;       // descending neighbor priority
    std::vector<Nbr> by_index;      // ascending neighbor index
    std::vector<uint32_t> rank;
  };

  static uint64_t edge_key(uint32_t u, uint32_t v) {
    return (static_cast<uint64_t>(u) << 32) | v;
  }

  uint32_t counts_[2] = {0, 0};
  uint64_t edge_count_ = 0;
  uint32_t max_degree_ = 0;
  SideData sides_[2];  // [0] = LeftU vertices, [1] = RightV vertices
  std::unordered_map<uint64_t, Sign> edge_index_;
};

// Strict total order per side: deg(a) > deg(b), ties broken by id(a) > id(b).
// Throws CrossSideComparisonError when a and b live on different sides.
bool priority_gt(VertexRef a, VertexRef b, const SignedBipartiteGraph& g);

// Public-API form of neighbors_desc over VertexRef.
std::vector<std::pair<VertexRef, Sign>> neighbors_desc(VertexRef v, const SignedBipartiteGraph& g);

// Same graph with the two sides swapped.
SignedBipartiteGraph transposed(const SignedBipartiteGraph& g);

// Same graph with every edge sign negated.
SignedBipartiteGraph sign_flipped(const SignedBipartiteGraph& g);

}  // namespace sbbc
