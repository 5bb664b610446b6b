#include "sbbc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace sbbc {

namespace {

// Counting sort by degree, ids ascending within a degree bucket, so rank
// position order is exactly ascending (deg, id); rank value = position.
std::vector<uint32_t> compute_ranks(const std::vector<uint32_t>& degree) {
  uint32_t n = static_cast<uint32_t>(degree.size());
  uint32_t max_deg = 0;
  for (uint32_t d : degree) max_deg = std::max(max_deg, d);
  std::vector<uint32_t> bucket_start(max_deg + 2, 0);
  for (uint32_t d : degree) ++bucket_start[d + 1];
  for (uint32_t d = 1; d < bucket_start.size(); ++d) bucket_start[d] += bucket_start[d - 1];
  std::vector<uint32_t> rank(n);
  for (uint32_t v = 0; v < n; ++v) rank[v] = bucket_start[degree[v]]++;
  return rank;
}

}  // namespace

SignedBipartiteGraph SignedBipartiteGraph::build(const std::vector<SignedEdge>& edges) {
  uint32_t m = 0, n = 0;
  for (const auto& e : edges) {
    m = std::max(m, e.u + 1);
    n = std::max(n, e.v + 1);
  }
  return build(edges, m, n);
}

SignedBipartiteGraph SignedBipartiteGraph::build(const std::vector<SignedEdge>& edges,
                                                 uint32_t left_count, uint32_t right_count) {
  for (const auto& e : edges) {
    if (e.u >= left_count || e.v >= right_count)
      throw InvalidArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") outside declared vertex counts " +
                                 std::to_string(left_count) + "x" + std::to_string(right_count));
  }

  std::vector<SignedEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v) {
      std::string what = "duplicate edge (" + std::to_string(sorted[i].u) + "," +
                         std::to_string(sorted[i].v) + ")";
      if (sorted[i].sign != sorted[i - 1].sign) what += " with conflicting signs";
      throw DuplicateEdgeError(what);
    }
  }

  SignedBipartiteGraph g;
  g.counts_[0] = left_count;
  g.counts_[1] = right_count;
  g.edge_count_ = sorted.size();

  std::vector<uint32_t> deg_left(left_count, 0), deg_right(right_count, 0);
  for (const auto& e : sorted) {
    ++deg_left[e.u];
    ++deg_right[e.v];
  }
  for (uint32_t d : deg_left) g.max_degree_ = std::max(g.max_degree_, d);
  for (uint32_t d : deg_right) g.max_degree_ = std::max(g.max_degree_, d);

  g.sides_[0].rank = compute_ranks(deg_left);
  g.sides_[1].rank = compute_ranks(deg_right);

  auto fill_side = [&](int side_id, uint32_t count, const std::vector<uint32_t>& deg) {
    SideData& sd = g.sides_[side_id];
    sd.offsets.assign(count + 1, 0);
    for (uint32_t v = 0; v < count; ++v) sd.offsets[v + 1] = sd.offsets[v] + deg[v];
    sd.by_index.resize(sorted.size());
    sd.by_rank.resize(sorted.size());
  };
  fill_side(0, left_count, deg_left);
  fill_side(1, right_count, deg_right);

  // Input is (u,v)-sorted, so left-side by_index fills in order; right side
  // gets a stable second pass.
  {
    std::vector<uint64_t> pos0 = g.sides_[0].offsets;
    std::vector<uint64_t> pos1 = g.sides_[1].offsets;
    for (const auto& e : sorted) {
      g.sides_[0].by_index[pos0[e.u]++] = {e.v, e.sign};
      g.sides_[1].by_index[pos1[e.v]++] = {e.u, e.sign};
    }
  }

  for (int side_id = 0; side_id < 2; ++side_id) {
    SideData& sd = g.sides_[side_id];
    const std::vector<uint32_t>& nbr_rank = g.sides_[side_id ^ 1].rank;
    uint32_t count = g.counts_[side_id];
    sd.by_rank = sd.by_index;
    for (uint32_t v = 0; v < count; ++v) {
      std::sort(sd.by_rank.begin() + static_cast<ptrdiff_t>(sd.offsets[v]),
                sd.by_rank.begin() + static_cast<ptrdiff_t>(sd.offsets[v + 1]),
                [&](const Nbr& a, const Nbr& b) { return nbr_rank[a.idx] > nbr_rank[b.idx]; });
    }
  }

  g.edge_index_.reserve(sorted.size());
  for (const auto& e : sorted) g.edge_index_.emplace(edge_key(e.u, e.v), e.sign);
  return g;
}

std::vector<SignedEdge> SignedBipartiteGraph::edges_sorted() const {
  std::vector<SignedEdge> out;
  out.reserve(edge_count_);
  for (uint32_t u = 0; u < counts_[0]; ++u)
    for (const Nbr& nb : neighbors_by_index(Side::LeftU, u)) out.push_back({u, nb.idx, nb.sign});
  return out;
}

GraphStats SignedBipartiteGraph::stats() const {
  GraphStats st;
  st.left_count = counts_[0];
  st.right_count = counts_[1];
  st.edge_count = edge_count_;
  st.max_degree = max_degree_;
  st.left_degree_histogram.assign(max_degree_ + 1, 0);
  st.right_degree_histogram.assign(max_degree_ + 1, 0);
  for (uint32_t u = 0; u < counts_[0]; ++u) ++st.left_degree_histogram[degree(Side::LeftU, u)];
  for (uint32_t v = 0; v < counts_[1]; ++v) ++st.right_degree_histogram[degree(Side::RightV, v)];
  return st;
}

bool priority_gt(VertexRef a, VertexRef b, const SignedBipartiteGraph& g) {
  if (a.side != b.side)
    throw CrossSideComparisonError("priority is ordered per side; cannot compare " +
                                   std::string(side_name(a.side)) + " vs " + side_name(b.side));
  return g.priority_rank(a.side, a.index) > g.priority_rank(b.side, b.index);
}

std::vector<std::pair<VertexRef, Sign>> neighbors_desc(VertexRef v,
                                                       const SignedBipartiteGraph& g) {
  std::vector<std::pair<VertexRef, Sign>> out;
  Side opp = opposite(v.side);
  for (const auto& nb : g.neighbors_desc(v.side, v.index))
    out.push_back({VertexRef{opp, nb.idx}, nb.sign});
  return out;
}

SignedBipartiteGraph transposed(const SignedBipartiteGraph& g) {
  std::vector<SignedEdge> edges = g.edges_sorted();
  for (auto& e : edges) std::swap(e.u, e.v);
  return SignedBipartiteGraph::build(edges, g.right_count(), g.left_count());
}

SignedBipartiteGraph sign_flipped(const SignedBipartiteGraph& g) {
  std::vector<SignedEdge> edges = g.edges_sorted();
  for (auto& e : edges) e.sign = flipped(e.sign);
  return SignedBipartiteGraph::build(edges, g.left_count(), g.right_count());
}

}  // namespace sbbc
