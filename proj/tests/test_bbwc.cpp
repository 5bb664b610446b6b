#include <doctest.h>

#include "sbbc/bbwc.hpp"
#include "sbbc/bigcount.hpp"
#include "sbbc/oracle.hpp"
#include "testutil.hpp"

using namespace sbbc;

TEST_CASE("wedge_type: sign patterns from the three-wedge table") {
  // left: anchor 0, tail 1 and 2; right: center 0
  auto make = [](Sign su, Sign sw1, Sign sw2) {
    return SignedBipartiteGraph::build({{0, 0, su}, {1, 0, sw1}, {2, 0, sw2}});
  };
  uint32_t tail[2] = {1, 2};

  auto ss = make(Sign::Positive, Sign::Positive, Sign::Positive);
  CHECK(wedge_type(ss, Side::LeftU, 0, 0, tail) == 0);
  CHECK(wedge_type_string(0, 2) == "ss");

  auto ds = make(Sign::Positive, Sign::Negative, Sign::Positive);
  uint64_t kappa = wedge_type(ds, Side::LeftU, 0, 0, tail);
  CHECK(wedge_type_string(kappa, 2) == "ds");

  auto dd = make(Sign::Positive, Sign::Negative, Sign::Negative);
  CHECK(wedge_type_string(wedge_type(dd, Side::LeftU, 0, 0, tail), 2) == "dd");

  auto sd = make(Sign::Positive, Sign::Positive, Sign::Negative);
  CHECK(wedge_type_string(wedge_type(sd, Side::LeftU, 0, 0, tail), 2) == "sd");

  // flipping every sign compares equal signs to equal signs
  auto flipped_ds = sign_flipped(ds);
  CHECK(wedge_type(flipped_ds, Side::LeftU, 0, 0, tail) == kappa);
}

TEST_CASE("wedge_type: missing edges are an error") {
  auto g = SignedBipartiteGraph::build({{0, 0, Sign::Positive}, {1, 0, Sign::Positive}}, 3, 1);
  uint32_t tail[2] = {1, 2};  // vertex 2 is not adjacent to the center
  CHECK_THROWS_AS(wedge_type(g, Side::LeftU, 0, 0, tail), MissingEdgeError);
}

TEST_CASE("bbwc on the 4x4 fixture: 6 wedges at the first anchor, count 0") {
  auto g = testutil::fig4_graph();
  RunOptions opts;
  opts.collect_per_anchor = true;
  auto r = count_balanced_bbwc(g, 3, 3, opts);
  CHECK(r.balanced_count == BigCount(0));
  REQUIRE(r.per_anchor.size() == 4);
  CHECK(r.per_anchor[0].wedges == 6);
  CHECK(r.work.wedges == 7);  // one more wedge anchored at u_4 through v_1
  CHECK(r.anchor_side == Side::LeftU);

  uint64_t sum = 0;
  for (const auto& a : r.per_anchor) sum += a.wedges;
  CHECK(sum == r.work.wedges);
}

TEST_CASE("bbwc counts the single biclique of an all-positive K_{3,3}") {
  auto r = count_balanced_bbwc(testutil::complete_graph(3, 3), 3, 3);
  CHECK(r.balanced_count == BigCount(1));
}

TEST_CASE("bbwc wedge counter equals the star-count formula") {
  // With left-side anchoring, every p-star centered on the right is
  // enumerated exactly once, so wedges = sum over v of C(deg(v), p).
  for (const auto& entry : testutil::make_corpus(5, 1)) {
    for (uint32_t p : {2u, 3u, 4u}) {
      RunOptions opts;
      opts.anchor_side = AnchorSide::Left;
      auto r = count_balanced_bbwc(entry.graph, p, 2, opts);
      BigCount expected;
      for (uint32_t v = 0; v < entry.graph.right_count(); ++v)
        expected += binomial(entry.graph.degree(Side::RightV, v), p);
      CHECK(BigCount(r.work.wedges) == expected);
    }
  }
}

TEST_CASE("bbwc equals the oracle across a corpus sample") {
  auto corpus = testutil::make_corpus(301, 2);  // 32 graphs
  for (const auto& entry : corpus)
    for (uint32_t p = 2; p <= 4; ++p)
      for (uint32_t q = 2; q <= 4; ++q) {
        CAPTURE(entry.seed);
        CHECK(count_balanced_bbwc(entry.graph, p, q).balanced_count ==
              count_balanced_bruteforce(entry.graph, p, q));
      }
}

TEST_CASE("bbwc totals are schedule independent") {
  auto corpus = testutil::make_corpus(88, 1);
  const auto& g = corpus.front().graph;
  auto serial = count_balanced_bbwc(g, 3, 3);
  RunOptions parallel;
  parallel.threads = 4;
  auto par = count_balanced_bbwc(g, 3, 3, parallel);
  CHECK(serial.balanced_count == par.balanced_count);
  CHECK(serial.work.wedges == par.work.wedges);
}

TEST_CASE("bbwc wide-key buckets: long tails agree with the oracle") {
  // tail length 16 with 20 anchor-side vertices overflows the packed 64-bit
  // key, forcing the wide-key bucket path
  auto g = testutil::complete_graph(20, 3);
  RunOptions opts;
  opts.anchor_side = AnchorSide::Left;
  auto r = count_balanced_bbwc(g, 17, 2, opts);
  OracleLimits limits;
  CHECK(r.balanced_count == count_balanced_bruteforce(g, 17, 2, limits));
  CHECK(r.balanced_count == binomial(20, 17).checked_mul(3));  // C(20,17) * C(3,2)
}

TEST_CASE("bbwc count is invariant under a global sign flip") {
  for (const auto& entry : testutil::make_corpus(91, 1)) {
    auto a = count_balanced_bbwc(entry.graph, 3, 3).balanced_count;
    auto b = count_balanced_bbwc(sign_flipped(entry.graph), 3, 3).balanced_count;
    CHECK(a == b);
  }
}
