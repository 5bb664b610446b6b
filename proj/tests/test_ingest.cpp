#include <doctest.h>

#include <sstream>

#include "sbbc/ingest.hpp"
#include "testutil.hpp"

using namespace sbbc;

TEST_CASE("parse_signed: token variants and comments") {
  std::istringstream in("0 0 1\n0 1 0\n");
  auto r = parse_signed(in);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph.edge_sign(0, 0) == Sign::Positive);
  CHECK(r.graph.edge_sign(0, 1) == Sign::Negative);

  std::istringstream commented("# c\n0 0 +\n");
  auto r2 = parse_signed(commented);
  CHECK(r2.graph.edge_count() == 1);
  CHECK(r2.graph.edge_sign(0, 0) == Sign::Positive);

  std::istringstream plus_minus("a x +1\nb x -1\n% note\na y -\n");
  auto r3 = parse_signed(plus_minus);
  CHECK(r3.graph.edge_count() == 3);
  CHECK(r3.left_ids == std::vector<std::string>{"a", "b"});
  CHECK(r3.graph.edge_sign(1, 0) == Sign::Negative);
}

TEST_CASE("parse_signed: bad sign token reports the line") {
  std::istringstream in("0 0 2\n");
  try {
    parse_signed(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }

  std::istringstream dup("0 0 1\n0 0 1\n");
  CHECK_THROWS_AS(parse_signed(dup), DuplicateEdgeError);
}

TEST_CASE("binarize_ratings: jester strict, epinions inclusive") {
  CHECK(apply_rating_rule(kJesterRule, 7) == Sign::Positive);
  CHECK(apply_rating_rule(kJesterRule, 6) == Sign::Negative);  // strictly greater than 6
  CHECK(apply_rating_rule(kEpinionsRule, 4) == Sign::Positive);
  CHECK(apply_rating_rule(kEpinionsRule, 3) == Sign::Negative);

  std::istringstream in("u1 i1 7\nu1 i2 6.5\nu2 i1 2\n");
  auto r = binarize_ratings(in, kJesterRule);
  CHECK(r.graph.edge_sign(0, 0) == Sign::Positive);
  CHECK(r.graph.edge_sign(0, 1) == Sign::Positive);
  CHECK(r.graph.edge_sign(1, 0) == Sign::Negative);
}

TEST_CASE("binarize_ratings: monotone in the rating") {
  for (const RatingRule& rule : {kJesterRule, kEpinionsRule, RatingRule{3.5, false}}) {
    double prev_rating = -10;
    for (double rating = -10; rating <= 10; rating += 0.25) {
      if (apply_rating_rule(rule, prev_rating) == Sign::Positive)
        CHECK(apply_rating_rule(rule, rating) == Sign::Positive);
      prev_rating = rating;
    }
  }
}

TEST_CASE("assign_random_signs: boundaries, frequency and determinism") {
  auto make_input = [] {
    std::ostringstream ss;
    for (int i = 0; i < 10000; ++i) ss << "u" << i % 250 << " v" << i / 250 << "\n";
    return ss.str();
  };
  std::string text = make_input();

  {
    std::istringstream in(text);
    auto r = assign_random_signs(in, 1.0, 5);
    for (const auto& e : r.graph.edges_sorted()) CHECK(e.sign == Sign::Positive);
  }
  {
    std::istringstream in(text);
    auto r = assign_random_signs(in, 0.0, 5);
    for (const auto& e : r.graph.edges_sorted()) CHECK(e.sign == Sign::Negative);
  }
  {
    std::istringstream in(text);
    auto r = assign_random_signs(in, 0.7, 12345);
    uint64_t positives = 0;
    for (const auto& e : r.graph.edges_sorted()) positives += e.sign == Sign::Positive;
    double fraction = static_cast<double>(positives) / 10000.0;
    CHECK(fraction > 0.68);
    CHECK(fraction < 0.72);

    std::istringstream in2(text);
    auto r2 = assign_random_signs(in2, 0.7, 12345);
    CHECK(r.graph.edges_sorted() == r2.graph.edges_sorted());
  }
}

TEST_CASE("canonical: write/read round trip") {
  auto k22 = testutil::complete_graph(2, 2);
  std::ostringstream out;
  write_canonical(k22, out);
  CHECK(out.str() == "2 2 4\n0 0 1\n0 1 1\n1 0 1\n1 1 1\n");

  GenParams params;
  params.left_count = 9;
  params.right_count = 7;
  params.density = 0.45;
  params.p_pos = 0.5;
  params.seed = 31;
  auto g = generate_random_bigraph(params);
  std::ostringstream buf;
  write_canonical(g, buf);
  std::istringstream in(buf.str());
  auto back = read_canonical(in);
  CHECK(back.left_count() == g.left_count());
  CHECK(back.right_count() == g.right_count());
  CHECK(back.edges_sorted() == g.edges_sorted());
}

TEST_CASE("canonical: tampered header is a HeaderMismatch") {
  std::istringstream in("2 2 5\n0 0 1\n0 1 1\n1 0 1\n1 1 1\n");
  CHECK_THROWS_AS(read_canonical(in), HeaderMismatchError);

  std::istringstream out_of_range("2 2 1\n5 0 1\n");
  CHECK_THROWS_AS(read_canonical(out_of_range), HeaderMismatchError);

  std::istringstream bad_sign("1 1 1\n0 0 +\n");
  CHECK_THROWS_AS(read_canonical(bad_sign), ParseError);
}

TEST_CASE("generate: saturation, infeasible targets, determinism") {
  GenParams params;
  params.left_count = 4;
  params.right_count = 4;
  params.target_edges = 16;
  params.seed = 1;
  auto k44 = generate_random_bigraph(params);
  CHECK(k44.edge_count() == 16);
  CHECK(k44.max_degree() == 4);

  params.target_edges = 17;
  CHECK_THROWS_AS(generate_random_bigraph(params), InfeasibleEdgeCountError);

  GenParams dens;
  dens.left_count = 10;
  dens.right_count = 10;
  dens.density = 0.5;
  dens.p_pos = 0.7;
  dens.seed = 42;
  std::ostringstream a, b;
  write_canonical(generate_random_bigraph(dens), a);
  write_canonical(generate_random_bigraph(dens), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().size() > 0);

  GenParams empty;
  empty.density = 0.5;
  std::ostringstream e;
  write_canonical(generate_random_bigraph(empty), e);
  CHECK(e.str() == "0 0 0\n");
}

TEST_CASE("IngestSpec validation: rule/format pairing") {
  IngestSpec spec;
  spec.format = InputFormat::RatedEdgeList;
  spec.rule = SigningRule::Native;
  CHECK_THROWS_AS(validate(spec), InvalidArgumentError);
  spec.rule = SigningRule::RatingThreshold;
  CHECK_NOTHROW(validate(spec));
  spec.format = InputFormat::UnsignedEdgeList;
  CHECK_THROWS_AS(validate(spec), InvalidArgumentError);
}
