#include "sbbc/oracle.hpp"

#include <string>

#include "detail.hpp"

namespace sbbc {

namespace {

void check_size_guard(const SignedBipartiteGraph& g, const OracleLimits& limits) {
  uint64_t cells = static_cast<uint64_t>(g.left_count()) * g.right_count();
  if (cells > limits.max_cells)
    throw SizeGuardError("instance has " + std::to_string(cells) +
                         " cells, above the oracle cap of " + std::to_string(limits.max_cells) +
                         " (raise OracleLimits::max_cells to override)");
}

// Cooperative deadline, consulted every few thousand subsets.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;
  uint32_t since_check = 0;

  explicit Deadline(const OracleLimits& limits) {
    if (limits.time_limit) at = std::chrono::steady_clock::now() + *limits.time_limit;
  }

  void poll() {
    if (!at || ++since_check < 4096) return;
    since_check = 0;
    if (std::chrono::steady_clock::now() > *at) throw TimeLimitError("time limit exceeded");
  }
};

// T = intersection of the chosen left vertices' neighborhoods.
std::vector<uint32_t> common_neighbors(const SignedBipartiteGraph& g,
                                       const uint32_t* left, uint32_t p) {
  std::vector<uint32_t> t, tmp;
  for (const auto& nb : g.neighbors_by_index(Side::LeftU, left[0])) t.push_back(nb.idx);
  for (uint32_t i = 1; i < p; ++i) {
    detail::intersect_indices(t, g.neighbors_by_index(Side::LeftU, left[i]), tmp);
    t.swap(tmp);
  }
  return t;
}

}  // namespace

Biclique Biclique::from_graph(const SignedBipartiteGraph& g, std::vector<uint32_t> left,
                              std::vector<uint32_t> right) {
  Biclique b;
  b.left = std::move(left);
  b.right = std::move(right);
  b.signs.resize(b.left.size() * b.right.size());
  for (size_t i = 0; i < b.left.size(); ++i) {
    for (size_t j = 0; j < b.right.size(); ++j) {
      auto s = g.edge_sign(b.left[i], b.right[j]);
      if (!s)
        throw MissingEdgeError("(" + std::to_string(b.left[i]) + "," +
                               std::to_string(b.right[j]) + ") is not an edge; vertex sets do "
                               "not induce a biclique");
      b.signs[i * b.right.size() + j] = *s;
    }
  }
  return b;
}

bool butterfly_balanced(const Butterfly& b) {
  int negatives = 0;
  for (Sign s : b.signs) negatives += (s == Sign::Negative);
  return negatives % 2 == 0;
}

bool biclique_balanced_pairwise(const Biclique& b) {
  size_t p = b.left.size(), q = b.right.size();
  for (size_t i = 0; i + 1 < p; ++i)
    for (size_t j = i + 1; j < p; ++j)
      for (size_t k = 0; k + 1 < q; ++k)
        for (size_t l = k + 1; l < q; ++l) {
          int negatives = (b.sign_at(i, k) == Sign::Negative) +
                          (b.sign_at(i, l) == Sign::Negative) +
                          (b.sign_at(j, k) == Sign::Negative) +
                          (b.sign_at(j, l) == Sign::Negative);
          if (negatives % 2 != 0) return false;
        }
  return true;
}

bool biclique_balanced_rank1(const Biclique& b) {
  size_t p = b.left.size(), q = b.right.size();
  if (p == 0 || q == 0) return true;
  // sigma of left[0] fixed Positive; columns follow from row 0, remaining
  // rows from column 0.
  std::vector<Sign> col(q), row(p);
  row[0] = Sign::Positive;
  for (size_t j = 0; j < q; ++j) col[j] = b.sign_at(0, j);
  for (size_t i = 0; i < p; ++i)
    row[i] = b.sign_at(i, 0) == col[0] ? Sign::Positive : Sign::Negative;
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < q; ++j) {
      Sign expect = row[i] == Sign::Positive ? col[j] : flipped(col[j]);
      if (b.sign_at(i, j) != expect) return false;
    }
  return true;
}

void for_each_pq_biclique(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                          const std::function<void(const Biclique&)>& fn,
                          const OracleLimits& limits) {
  require_pq(p, q);
  check_size_guard(g, limits);
  uint32_t m = g.left_count();
  if (p > m) return;
  Deadline deadline(limits);
  detail::for_each_combination(m, p, [&](const uint32_t* left, uint32_t) {
    deadline.poll();
    std::vector<uint32_t> t = common_neighbors(g, left, p);
    if (t.size() < q) return;
    detail::for_each_combination(static_cast<uint32_t>(t.size()), q,
                                 [&](const uint32_t* rsel, uint32_t) {
                                   std::vector<uint32_t> right(q);
                                   for (uint32_t j = 0; j < q; ++j) right[j] = t[rsel[j]];
                                   fn(Biclique::from_graph(
                                       g, std::vector<uint32_t>(left, left + p), std::move(right)));
                                 });
  });
}

BigCount count_all_bruteforce(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                              const OracleLimits& limits) {
  require_pq(p, q);
  check_size_guard(g, limits);
  BigCount total;
  BinomialCache choose;
  uint32_t m = g.left_count();
  if (p > m) return total;
  Deadline deadline(limits);
  detail::for_each_combination(m, p, [&](const uint32_t* left, uint32_t) {
    deadline.poll();
    std::vector<uint32_t> t = common_neighbors(g, left, p);
    total += choose(t.size(), q);
  });
  return total;
}

BigCount count_balanced_bruteforce(const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                                   const OracleLimits& limits) {
  BigCount total;
  for_each_pq_biclique(
      g, p, q,
      [&](const Biclique& b) {
        if (biclique_balanced_pairwise(b)) total += BigCount(1);
      },
      limits);
  return total;
}

}  // namespace sbbc
