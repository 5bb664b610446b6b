#include <doctest.h>

#include <chrono>

#include "sbbc/count.hpp"
#include "sbbc/report.hpp"
#include "testutil.hpp"

using namespace sbbc;

TEST_CASE("csv schema is fixed") {
  CHECK(csv_header() ==
        "dataset,algo,p,q,count,wedges,subsets,intersections,bicliques_materialized,wall_ms,"
        "peak_mem_bytes,status");

  CountReport r;
  r.algorithm = "bbvp";
  r.p = 3;
  r.q = 4;
  r.balanced_count = BigCount(42);
  r.status = RunStatus::Ok;
  r.wall_ms = 1.5;
  auto row = csv_row("g.canonical", r);
  CHECK(row.rfind("g.canonical,bbvp,3,4,42,", 0) == 0);

  r.status = RunStatus::Inf;
  auto inf_row = csv_row("g.canonical", r);
  CHECK(inf_row.rfind("g.canonical,bbvp,3,4,,", 0) == 0);  // INF rows carry no count
  CHECK(inf_row.find(",inf") != std::string::npos);
}

TEST_CASE("run_count wraps timing, memory and status") {
  auto g = testutil::complete_graph(4, 4);
  auto r = run_count(Algorithm::Bbvp, g, 3, 3);
  CHECK(r.status == RunStatus::Ok);
  CHECK(r.balanced_count == BigCount(16));
  CHECK(r.wall_ms >= 0.0);
  CHECK(r.mem_method == "rusage_maxrss");
  CHECK(r.peak_mem_bytes > 0);
}

TEST_CASE("a hopeless time limit reports INF, not a count") {
  GenParams params;
  params.left_count = 300;
  params.right_count = 300;
  params.density = 0.2;
  params.p_pos = 0.5;
  params.seed = 9;
  auto g = generate_random_bigraph(params);
  RunOptions opts;
  opts.time_limit = std::chrono::microseconds(1);
  opts.check_interval = 1;
  auto r = run_count(Algorithm::Baseline, g, 3, 3, opts);
  CHECK(r.status == RunStatus::Inf);
}

TEST_CASE("oracle size guard surfaces as an error report") {
  auto g = testutil::complete_graph(30, 30);
  auto r = run_count(Algorithm::Oracle, g, 2, 2);
  CHECK(r.status == RunStatus::Error);
  CHECK(r.error.find("oracle cap") != std::string::npos);
}

TEST_CASE("algorithm names round-trip") {
  for (auto a : {Algorithm::Oracle, Algorithm::Baseline, Algorithm::Bbwc, Algorithm::Bbvp})
    CHECK(algorithm_from_name(algorithm_name(a)) == a);
  CHECK_FALSE(algorithm_from_name("nope").has_value());
}
