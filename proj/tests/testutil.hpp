#pragma once

// Shared fixtures and independent reference computations for the test suites.

#include <vector>

#include "sbbc/graph.hpp"
#include "sbbc/ingest.hpp"
#include "sbbc/rng.hpp"

namespace sbbc::testutil {

// 4x4 example: u_1 adjacent to all of v_1..v_4; u_2 misses v_4; u_3 misses
// v_3; u_4 misses v_2. Vertices are 0-based (u_1 -> 0). No three left
// vertices share three neighbors, so no (3,3)-biclique exists. Signs all
// positive; the structural counters under test are sign-independent.
inline SignedBipartiteGraph fig4_graph() {
  std::vector<SignedEdge> edges;
  auto add = [&](uint32_t u, uint32_t v) { edges.push_back({u, v, Sign::Positive}); };
  add(0, 0); add(0, 1); add(0, 2); add(0, 3);
  add(1, 0); add(1, 1); add(1, 2);
  add(2, 0); add(2, 1); add(2, 3);
  add(3, 0); add(3, 2); add(3, 3);
  return SignedBipartiteGraph::build(edges);
}

// K_{4,4} with negative edges (u_1,v_4), (u_3,v_1), (u_4,v_1), (u_4,v_2).
inline SignedBipartiteGraph fig1b_graph() {
  std::vector<SignedEdge> edges;
  for (uint32_t u = 0; u < 4; ++u)
    for (uint32_t v = 0; v < 4; ++v) edges.push_back({u, v, Sign::Positive});
  auto negate = [&](uint32_t u, uint32_t v) {
    for (auto& e : edges)
      if (e.u == u && e.v == v) e.sign = Sign::Negative;
  };
  negate(0, 3);
  negate(2, 0);
  negate(3, 0);
  negate(3, 1);
  return SignedBipartiteGraph::build(edges);
}

inline SignedBipartiteGraph complete_graph(uint32_t m, uint32_t n, Sign s = Sign::Positive) {
  std::vector<SignedEdge> edges;
  for (uint32_t u = 0; u < m; ++u)
    for (uint32_t v = 0; v < n; ++v) edges.push_back({u, v, s});
  return SignedBipartiteGraph::build(edges, m, n);
}

// The seeded oracle-equivalence corpus: >= 200 random graphs with m,n <= 12
// across four densities and four sign biases.
struct CorpusEntry {
  SignedBipartiteGraph graph;
  double density;
  double p_pos;
  uint64_t seed;
};

inline std::vector<CorpusEntry> make_corpus(uint64_t base_seed = 20240901,
                                            uint32_t per_combo = 13) {
  const double densities[] = {0.2, 0.4, 0.6, 0.8};
  const double p_pos_values[] = {0.3, 0.5, 0.7, 1.0};
  std::vector<CorpusEntry> corpus;
  CounterRng size_rng(base_seed, 7);
  uint64_t seed = base_seed;
  for (double density : densities)
    for (double p_pos : p_pos_values)
      for (uint32_t rep = 0; rep < per_combo; ++rep) {
        GenParams params;
        params.left_count = 4 + static_cast<uint32_t>(size_rng.next_below(9));   // 4..12
        params.right_count = 4 + static_cast<uint32_t>(size_rng.next_below(9));  // 4..12
        params.density = density;
        params.p_pos = p_pos;
        params.seed = ++seed;
        corpus.push_back({generate_random_bigraph(params), density, p_pos, params.seed});
      }
  return corpus;
}

// Independent balanced-butterfly counter: plain quadruple loop over vertex
// pairs, no shared code with the oracle's subset enumeration.
inline uint64_t quad_loop_balanced_butterflies(const SignedBipartiteGraph& g) {
  uint64_t count = 0;
  for (uint32_t u1 = 0; u1 < g.left_count(); ++u1)
    for (uint32_t u2 = u1 + 1; u2 < g.left_count(); ++u2)
      for (uint32_t v1 = 0; v1 < g.right_count(); ++v1)
        for (uint32_t v2 = v1 + 1; v2 < g.right_count(); ++v2) {
          auto a = g.edge_sign(u1, v1), b = g.edge_sign(u1, v2);
          auto c = g.edge_sign(u2, v1), d = g.edge_sign(u2, v2);
          if (!a || !b || !c || !d) continue;
          int negatives = (*a == Sign::Negative) + (*b == Sign::Negative) +
                          (*c == Sign::Negative) + (*d == Sign::Negative);
          if (negatives % 2 == 0) ++count;
        }
  return count;
}

}  // namespace sbbc::testutil
