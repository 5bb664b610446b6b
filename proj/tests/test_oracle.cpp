#include <doctest.h>

#include <numeric>

#include "sbbc/oracle.hpp"
#include "sbbc/rng.hpp"
#include "testutil.hpp"

using namespace sbbc;

namespace {

Biclique make_biclique(uint32_t p, uint32_t q, const std::vector<Sign>& signs) {
  Biclique b;
  b.left.resize(p);
  b.right.resize(q);
  std::iota(b.left.begin(), b.left.end(), 0);
  std::iota(b.right.begin(), b.right.end(), 0);
  b.signs = signs;
  return b;
}

}  // namespace

TEST_CASE("butterfly balance is negative-edge parity") {
  Butterfly all_pos{0, 1, 0, 1, {Sign::Positive, Sign::Positive, Sign::Positive, Sign::Positive}};
  CHECK(butterfly_balanced(all_pos));

  Butterfly one_neg = all_pos;
  one_neg.signs[2] = Sign::Negative;
  CHECK_FALSE(butterfly_balanced(one_neg));

  Butterfly all_neg{0, 1, 0, 1, {Sign::Negative, Sign::Negative, Sign::Negative, Sign::Negative}};
  CHECK(butterfly_balanced(all_neg));
}

TEST_CASE("exactly 8 of the 16 signed K_{2,2} assignments are balanced") {
  int balanced = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Butterfly b{0, 1, 0, 1, {}};
    for (int i = 0; i < 4; ++i)
      b.signs[i] = (mask >> i) & 1 ? Sign::Negative : Sign::Positive;
    balanced += butterfly_balanced(b);
  }
  CHECK(balanced == 8);
}

TEST_CASE("pairwise balance on fixed matrices") {
  CHECK(biclique_balanced_pairwise(make_biclique(3, 3, std::vector<Sign>(9, Sign::Positive))));

  auto k22 = make_biclique(2, 2, {Sign::Negative, Sign::Positive, Sign::Positive, Sign::Positive});
  CHECK_FALSE(biclique_balanced_pairwise(k22));
  CHECK_FALSE(biclique_balanced_rank1(k22));

  // outer product of row signs (+,-) and column signs (+,+,-)
  Sign rows[2] = {Sign::Positive, Sign::Negative};
  Sign cols[3] = {Sign::Positive, Sign::Positive, Sign::Negative};
  std::vector<Sign> outer(6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      outer[i * 3 + j] = rows[i] == cols[j] ? Sign::Positive : Sign::Negative;
  auto k23 = make_biclique(2, 3, outer);
  CHECK(biclique_balanced_pairwise(k23));
  CHECK(biclique_balanced_rank1(k23));
}

TEST_CASE("rank-1 factorization agrees with pairwise on 1000 random matrices") {
  CounterRng rng(2023);
  for (int trial = 0; trial < 1000; ++trial) {
    uint32_t p = 2 + static_cast<uint32_t>(rng.next_below(4));  // 2..5
    uint32_t q = 2 + static_cast<uint32_t>(rng.next_below(4));
    std::vector<Sign> signs(p * q);
    for (auto& s : signs) s = rng.next_below(2) ? Sign::Negative : Sign::Positive;
    auto b = make_biclique(p, q, signs);
    CHECK(biclique_balanced_pairwise(b) == biclique_balanced_rank1(b));
  }
}

TEST_CASE("brute force on K_{4,4} and the 4x4 fixture") {
  auto k44 = testutil::complete_graph(4, 4);
  CHECK(count_all_bruteforce(k44, 3, 3).to_string() == "16");
  CHECK(count_balanced_bruteforce(k44, 3, 3).to_string() == "16");

  auto fig4 = testutil::fig4_graph();
  CHECK(count_all_bruteforce(fig4, 3, 3).to_string() == "0");
  CHECK(count_balanced_bruteforce(fig4, 3, 3).to_string() == "0");
}

TEST_CASE("brute force (2,2) equals an independent quadruple loop") {
  GenParams params;
  params.left_count = 8;
  params.right_count = 8;
  params.density = 0.6;
  params.p_pos = 0.5;
  params.seed = 404;
  auto g = generate_random_bigraph(params);
  uint64_t expected = testutil::quad_loop_balanced_butterflies(g);
  CHECK(count_balanced_bruteforce(g, 2, 2) == BigCount(expected));
}

TEST_CASE("size guard refuses big instances unless raised") {
  auto g = testutil::complete_graph(21, 21);
  CHECK_THROWS_AS(count_all_bruteforce(g, 2, 2), SizeGuardError);
  OracleLimits wide;
  wide.max_cells = 1000;
  CHECK(count_all_bruteforce(g, 2, 2, wide) == binomial(21, 2).checked_mul(210));
}

TEST_CASE("balanced <= all, equality on all-positive graphs") {
  for (const auto& entry : testutil::make_corpus(11, 2)) {
    BigCount all = count_all_bruteforce(entry.graph, 2, 3);
    BigCount bal = count_balanced_bruteforce(entry.graph, 2, 3);
    CHECK(bal <= all);
    if (entry.p_pos == 1.0) CHECK(bal == all);
  }
}

TEST_CASE("verdicts survive a global sign flip; sides are symmetric") {
  for (const auto& entry : testutil::make_corpus(17, 1)) {
    auto flipped = sign_flipped(entry.graph);
    CHECK(count_balanced_bruteforce(entry.graph, 2, 2) ==
          count_balanced_bruteforce(flipped, 2, 2));
    auto t = transposed(entry.graph);
    CHECK(count_balanced_bruteforce(entry.graph, 3, 2) == count_balanced_bruteforce(t, 2, 3));
  }
}

TEST_CASE("p or q below 2 is rejected") {
  auto k22 = testutil::complete_graph(2, 2);
  CHECK_THROWS_AS(count_balanced_bruteforce(k22, 1, 3), InvalidArgumentError);
  CHECK_THROWS_AS(count_all_bruteforce(k22, 2, 0), InvalidArgumentError);
}

TEST_CASE("BigCount overflow is a hard error") {
  CHECK_THROWS_AS(binomial(200, 100), CountOverflowError);
  CHECK(binomial(128, 64).to_string() == "23951146041928082866135587776380551750");
  BigCount nearly = BigCount::max();
  CHECK_THROWS_AS(nearly += BigCount(1), CountOverflowError);
}
