// sbbc: count / bench / convert / generate / stats for signed bipartite graphs.
//
// Exit codes: 0 success (including INF benchmark rows), 1 verification
// mismatch, 2 parse or validation failure, 3 count overflow.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbbc/count.hpp"
#include "sbbc/graph.hpp"
#include "sbbc/ingest.hpp"
#include "sbbc/oracle.hpp"
#include "sbbc/report.hpp"

namespace {

using namespace sbbc;

struct InputFlags {
  std::string path;
  std::string format = "canonical";
  std::string pos_rule = "epinions";
  double p_pos = 0.7;
  uint64_t seed = 0;
};

void add_input_flags(CLI::App* cmd, InputFlags& f, bool require_input = true) {
  auto* opt = cmd->add_option("--input,-i", f.path, "input file ('-' for stdin)");
  if (require_input) opt->required();
  cmd->add_option("--format", f.format, "input format")
      ->check(CLI::IsMember({"canonical", "edgelist", "ratings", "unsigned"}))
      ->capture_default_str();
  cmd->add_option("--pos-rule", f.pos_rule,
                  "rating rule: jester (>6), epinions (>=4) or threshold:<x> (>=x)");
  cmd->add_option("--p-pos", f.p_pos, "positive-sign probability for unsigned inputs")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for random sign assignment")->capture_default_str();
}

RatingRule parse_pos_rule(const std::string& s) {
  if (s == "jester") return kJesterRule;
  if (s == "epinions") return kEpinionsRule;
  if (s.rfind("threshold:", 0) == 0) {
    RatingRule r;
    r.pos_min = std::stod(s.substr(10));
    r.strict = false;
    return r;
  }
  throw InvalidArgumentError("unknown --pos-rule '" + s + "'");
}

IngestSpec spec_from_flags(const InputFlags& f) {
  IngestSpec spec;
  if (f.format == "canonical") {
    spec.format = InputFormat::Canonical;
    spec.rule = SigningRule::Native;
  } else if (f.format == "edgelist") {
    spec.format = InputFormat::SignedEdgeList;
    spec.rule = SigningRule::Native;
  } else if (f.format == "ratings") {
    spec.format = InputFormat::RatedEdgeList;
    spec.rule = SigningRule::RatingThreshold;
    spec.rating = parse_pos_rule(f.pos_rule);
  } else {
    spec.format = InputFormat::UnsignedEdgeList;
    spec.rule = SigningRule::BernoulliRandom;
    spec.p_pos = f.p_pos;
    spec.seed = f.seed;
  }
  return spec;
}

IngestResult load_input(const InputFlags& f) {
  IngestSpec spec = spec_from_flags(f);
  if (f.path == "-") return ingest_graph(std::cin, spec);
  std::ifstream in(f.path);
  if (!in) throw Error("cannot open " + f.path);
  return ingest_graph(in, spec);
}

RunOptions options_from(double time_limit_s, uint32_t threads, const std::string& anchor) {
  RunOptions opts;
  if (time_limit_s > 0)
    opts.time_limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(time_limit_s));
  opts.threads = threads;
  if (anchor == "left")
    opts.anchor_side = AnchorSide::Left;
  else if (anchor == "right")
    opts.anchor_side = AnchorSide::Right;
  return opts;
}

std::vector<Algorithm> parse_algos(const std::vector<std::string>& names) {
  std::vector<Algorithm> out;
  for (const auto& n : names) {
    auto a = algorithm_from_name(n);
    if (!a) throw InvalidArgumentError("unknown algorithm '" + n + "'");
    out.push_back(*a);
  }
  return out;
}

int cmd_count(const InputFlags& input, const std::string& algo_name, uint32_t p, uint32_t q,
              double time_limit_s, uint32_t threads, const std::string& anchor, bool verify,
              const std::string& output) {
  auto algo = algorithm_from_name(algo_name);
  if (!algo) throw InvalidArgumentError("unknown algorithm '" + algo_name + "'");
  require_pq(p, q);

  IngestResult data = load_input(input);
  const SignedBipartiteGraph& g = data.graph;
  RunOptions opts = options_from(time_limit_s, threads, anchor);

  CountReport report = run_count(*algo, g, p, q, opts);
  if (output == "csv")
    std::cout << csv_header() << '\n' << csv_row(input.path, report) << '\n';
  else if (output == "json")
    std::cout << json_report(input.path, report) << '\n';
  else
    std::cout << text_report(input.path, report);

  if (report.status == RunStatus::Error)
    return report.error_kind == ErrorKind::Overflow ? 3 : 2;

  if (verify && report.status == RunStatus::Ok) {
    bool ok = true;
    if (*algo != Algorithm::Bbvp) {
      CountReport check = run_count(Algorithm::Bbvp, g, p, q, opts);
      if (check.balanced_count != report.balanced_count) {
        std::cerr << "verify: bbvp disagrees (" << check.balanced_count.to_string() << " vs "
                  << report.balanced_count.to_string() << ")\n";
        ok = false;
      }
    }
    uint64_t cells = static_cast<uint64_t>(g.left_count()) * g.right_count();
    if (cells <= OracleLimits{}.max_cells) {
      CountReport check = run_count(Algorithm::Oracle, g, p, q, opts);
      if (check.balanced_count != report.balanced_count) {
        std::cerr << "verify: oracle disagrees (" << check.balanced_count.to_string() << " vs "
                  << report.balanced_count.to_string() << ")\n";
        ok = false;
      }
    } else {
      std::cerr << "verify: instance above the oracle size cap; cross-checked "
                << (*algo != Algorithm::Bbvp ? "bbvp only" : "nothing") << '\n';
    }
    if (!ok) return 1;
    std::cerr << "verify: ok\n";
  }
  return 0;
}

int cmd_bench(const std::vector<std::string>& inputs, const InputFlags& proto,
              const std::vector<std::string>& algo_names, std::vector<uint32_t> p_grid,
              std::vector<uint32_t> q_grid, uint32_t reps, double time_limit_s, uint32_t threads,
              const std::string& anchor, const std::string& output) {
  std::vector<Algorithm> algos = parse_algos(algo_names);
  if (p_grid.empty()) p_grid = {3, 4, 5};
  if (q_grid.empty()) q_grid = {3, 4, 5, 6, 7};
  for (uint32_t p : p_grid)
    for (uint32_t q : q_grid) require_pq(p, q);
  RunOptions opts = options_from(time_limit_s, threads, anchor);

  if (output == "csv") std::cout << csv_header() << '\n';
  // Rows stream out as they finish, so an interrupted plan still leaves a
  // usable partial table.
  for (const std::string& path : inputs) {
    InputFlags f = proto;
    f.path = path;
    IngestResult data = load_input(f);
    for (Algorithm algo : algos)
      for (uint32_t p : p_grid)
        for (uint32_t q : q_grid)
          for (uint32_t rep = 0; rep < reps; ++rep) {
            CountReport r = run_count(algo, data.graph, p, q, opts);
            if (output == "json")
              std::cout << json_report(path, r) << std::endl;
            else
              std::cout << csv_row(path, r) << std::endl;
          }
  }
  return 0;
}

int cmd_convert(const InputFlags& input, const std::string& out_path) {
  IngestResult data = load_input(input);
  if (out_path == "-") {
    write_canonical(data.graph, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open " + out_path);
    write_canonical(data.graph, out);
    if (!data.left_ids.empty() || !data.right_ids.empty()) {
      std::ofstream map(out_path + ".map");
      for (size_t i = 0; i < data.left_ids.size(); ++i)
        map << "U " << i << ' ' << data.left_ids[i] << '\n';
      for (size_t i = 0; i < data.right_ids.size(); ++i)
        map << "V " << i << ' ' << data.right_ids[i] << '\n';
    }
  }
  return 0;
}

int cmd_generate(uint32_t m, uint32_t n, std::optional<double> density,
                 std::optional<uint64_t> edges, double p_pos, uint64_t seed,
                 const std::string& out_path) {
  GenParams params;
  params.left_count = m;
  params.right_count = n;
  params.density = density;
  params.target_edges = edges;
  params.p_pos = p_pos;
  params.seed = seed;
  SignedBipartiteGraph g = generate_random_bigraph(params);
  if (out_path == "-") {
    write_canonical(g, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open " + out_path);
    write_canonical(g, out);
  }
  return 0;
}

int cmd_stats(const InputFlags& input, const std::string& output) {
  IngestResult data = load_input(input);
  GraphStats st = data.graph.stats();
  if (output == "json") {
    nlohmann::json j;
    j["left_count"] = st.left_count;
    j["right_count"] = st.right_count;
    j["edge_count"] = st.edge_count;
    j["max_degree"] = st.max_degree;
    j["left_degree_histogram"] = st.left_degree_histogram;
    j["right_degree_histogram"] = st.right_degree_histogram;
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "|U| = " << st.left_count << "\n|V| = " << st.right_count
            << "\n|E| = " << st.edge_count << "\nmax degree = " << st.max_degree << '\n';
  auto print_hist = [](const char* label, const std::vector<uint64_t>& h) {
    std::cout << label << " degree histogram (degree: vertices):\n";
    for (size_t d = 0; d < h.size(); ++d)
      if (h[d] != 0) std::cout << "  " << d << ": " << h[d] << '\n';
  };
  print_hist("left", st.left_degree_histogram);
  print_hist("right", st.right_degree_histogram);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced (p,q)-biclique counting in signed bipartite graphs"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "count balanced (p,q)-bicliques");
  InputFlags count_input;
  add_input_flags(count, count_input);
  std::string algo = "bbvp";
  uint32_t p = 3, q = 3, threads = 1;
  double time_limit_s = 0;
  std::string anchor = "auto", output = "text";
  bool verify = false;
  count->add_option("--algo", algo, "oracle, baseline, bbwc or bbvp")->capture_default_str();
  count->add_option("--p,-p", p, "left-side biclique size (>= 2)")->required();
  count->add_option("--q,-q", q, "right-side biclique size (>= 2)")->required();
  count->add_option("--time-limit", time_limit_s, "seconds before reporting INF (0 = none)");
  count->add_option("--threads", threads, "worker threads")->capture_default_str();
  count->add_option("--anchor-side", anchor, "auto, left or right")
      ->check(CLI::IsMember({"auto", "left", "right"}))
      ->capture_default_str();
  count->add_flag("--verify", verify, "cross-check against bbvp and the oracle (when in cap)");
  count->add_option("--output", output, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark grid, one report row per run");
  InputFlags bench_proto;
  std::vector<std::string> bench_inputs;
  bench->add_option("--input,-i", bench_inputs, "input file(s)")->required();
  bench->add_option("--format", bench_proto.format, "input format")
      ->check(CLI::IsMember({"canonical", "edgelist", "ratings", "unsigned"}))
      ->capture_default_str();
  bench->add_option("--pos-rule", bench_proto.pos_rule, "rating rule for ratings inputs");
  bench->add_option("--p-pos", bench_proto.p_pos, "positive probability for unsigned inputs");
  bench->add_option("--seed", bench_proto.seed, "seed for unsigned inputs");
  std::vector<std::string> bench_algos{"baseline", "bbwc", "bbvp"};
  std::vector<uint32_t> p_grid, q_grid;
  uint32_t reps = 1;
  std::string bench_output = "csv";
  bench->add_option("--algo", bench_algos, "algorithms to run")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--p,-p", p_grid, "p grid (default 3,4,5)")->delimiter(',');
  bench->add_option("--q,-q", q_grid, "q grid (default 3,4,5,6,7)")->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per cell")->capture_default_str();
  double bench_limit_s = 0;
  uint32_t bench_threads = 1;
  std::string bench_anchor = "auto";
  bench->add_option("--time-limit", bench_limit_s, "per-run limit in seconds (0 = none)");
  bench->add_option("--threads", bench_threads, "worker threads per run");
  bench->add_option("--anchor-side", bench_anchor, "auto, left or right")
      ->check(CLI::IsMember({"auto", "left", "right"}));
  bench->add_option("--output", bench_output, "csv or json (one object per line)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // convert
  auto* convert = app.add_subcommand("convert", "normalize any input to canonical form");
  InputFlags convert_input;
  add_input_flags(convert, convert_input);
  std::string convert_out;
  convert->add_option("--out,-o", convert_out, "output path ('-' for stdout)")->required();

  // generate
  auto* generate = app.add_subcommand("generate", "emit a seeded random signed bipartite graph");
  uint32_t gen_m = 0, gen_n = 0;
  std::optional<double> gen_density;
  std::optional<uint64_t> gen_edges;
  double gen_p_pos = 1.0;
  uint64_t gen_seed = 0;
  std::string gen_out;
  generate->add_option("--m", gen_m, "left vertex count")->required();
  generate->add_option("--n", gen_n, "right vertex count")->required();
  generate->add_option("--density", gen_density, "per-cell edge probability");
  generate->add_option("--edges", gen_edges, "exact edge count");
  generate->add_option("--p-pos", gen_p_pos, "positive-sign probability")->capture_default_str();
  generate->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  generate->add_option("--out,-o", gen_out, "output path ('-' for stdout)")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "print partition sizes, |E|, max degree, histograms");
  InputFlags stats_input;
  add_input_flags(stats, stats_input);
  std::string stats_output = "text";
  stats->add_option("--output", stats_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed())
      return cmd_count(count_input, algo, p, q, time_limit_s, threads, anchor, verify, output);
    if (bench->parsed())
      return cmd_bench(bench_inputs, bench_proto, bench_algos, p_grid, q_grid, reps,
                       bench_limit_s, bench_threads, bench_anchor, bench_output);
    if (convert->parsed()) return cmd_convert(convert_input, convert_out);
    if (generate->parsed())
      return cmd_generate(gen_m, gen_n, gen_density, gen_edges, gen_p_pos, gen_seed, gen_out);
    if (stats->parsed()) return cmd_stats(stats_input, stats_output);
  } catch (const CountOverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
