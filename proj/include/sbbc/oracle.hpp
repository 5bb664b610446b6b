#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sbbc/bigcount.hpp"
#include "sbbc/graph.hpp"

namespace sbbc {

// Explicit (p,q)-biclique: both vertex sets plus the full sign submatrix.
// Construction from a graph verifies cohesiveness (every cross pair is an
// edge); a missing edge is a hard error.
struct Biclique {
  std::vector<uint32_t> left;   // sorted ascending, size p
  std::vector<uint32_t> right;  // sorted ascending, size q
  std::vector<Sign> signs;      // row-major, left.size() x right.size()

  Sign sign_at(size_t i, size_t j) const { return signs[i * right.size() + j]; }

  static Biclique from_graph(const SignedBipartiteGraph& g, std::vector<uint32_t> left,
                             std::vector<uint32_t> right);
};

struct Butterfly {
  uint32_t u_i, u_j;  // LeftU
  uint32_t v_i, v_j;  // RightV
  Sign signs[4];      // (u_i,v_i), (u_i,v_j), (u_j,v_i), (u_j,v_j)
};

// Balanced iff the butterfly carries an even number of negative edges.
bool butterfly_balanced(const Butterfly& b);

// Balance via the definition: no unbalanced butterfly among the
// C(p,2)*C(q,2) contained ones. O(p^2 q^2).
bool biclique_balanced_pairwise(const Biclique& b);

// Balance via sign factorization: true iff per-vertex signs sigma exist with
// sign(u,v) = sigma_u * sigma_v. Fix the first row, propagate, verify.
// O(pq). Independent of the pairwise route; the two must always agree.
bool biclique_balanced_rank1(const Biclique& b);

// The oracle refuses instances above max_cells (m*n) unless the caller raises
// the cap; it exists for desk-scale verification, not production. A time
// limit, when set, is checked cooperatively inside the subset loop.
struct OracleLimits {
  uint64_t max_cells = 400;
  std::optional<std::chrono::steady_clock::duration> time_limit;
};

// Enumerate every (p,q)-biclique, lexicographic in (L, R).
void for_each_pq_biclique(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                          const std::function<void(const Biclique&)>& fn,
                          const OracleLimits& limits = {});

// Deliberately naive ground truth: enumerate all p-subsets L of the left
// side, intersect their neighborhoods, and either add C(|T|,q) (count_all) or
// test every q-subset with the pairwise balance check (count_balanced).
BigCount count_all_bruteforce(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                              const OracleLimits& limits = {});
BigCount count_balanced_bruteforce(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                   const OracleLimits& limits = {});

}  // namespace sbbc
