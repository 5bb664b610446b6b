#include "sbbc/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace sbbc {

namespace {

constexpr uint64_t kEdgeStream = 0;
constexpr uint64_t kSignStream = 1;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_comment_or_blank(std::string_view line, const std::string& prefixes) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return prefixes.find(c) != std::string::npos;
  }
  return true;  // blank
}

uint32_t parse_u32(std::string_view tok, size_t line_no) {
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

uint64_t parse_u64(std::string_view tok, size_t line_no) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

double parse_double(std::string_view tok, size_t line_no) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected a number, got '" + std::string(tok) + "'");
  return value;
}

Sign parse_sign(std::string_view tok, size_t line_no) {
  if (tok == "1" || tok == "+" || tok == "+1") return Sign::Positive;
  if (tok == "0" || tok == "-" || tok == "-1") return Sign::Negative;
  throw ParseError(line_no, "invalid sign token '" + std::string(tok) +
                                "' (expected 1, 0, +, -, +1 or -1)");
}

// First-seen dense remapping for one side.
struct IdMap {
  std::unordered_map<std::string, uint32_t> to_dense;
  std::vector<std::string> to_external;

  uint32_t intern(std::string_view id) {
    auto it = to_dense.find(std::string(id));
    if (it != to_dense.end()) return it->second;
    uint32_t dense = static_cast<uint32_t>(to_external.size());
    to_dense.emplace(std::string(id), dense);
    to_external.emplace_back(id);
    return dense;
  }
};

// Streams lines, skipping comments/blanks, calling fn(tokens, line_no).
template <class Fn>
void for_each_record(std::istream& in, const std::string& comment_prefixes, Fn&& fn) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line, comment_prefixes)) continue;
    fn(split_ws(line), line_no);
  }
}

IngestResult finish(std::vector<SignedEdge> edges, IdMap left, IdMap right) {
  IngestResult result;
  result.graph = SignedBipartiteGraph::build(
      edges, static_cast<uint32_t>(left.to_external.size()),
      static_cast<uint32_t>(right.to_external.size()));
  result.left_ids = std::move(left.to_external);
  result.right_ids = std::move(right.to_external);
  return result;
}

}  // namespace

void validate(const IngestSpec& spec) {
  auto fail = [](const char* msg) { throw InvalidArgumentError(msg); };
  switch (spec.rule) {
    case SigningRule::Native:
      if (spec.format != InputFormat::SignedEdgeList && spec.format != InputFormat::Canonical)
        fail("Native signing applies only to signed edge lists or canonical files");
      break;
    case SigningRule::RatingThreshold:
      if (spec.format != InputFormat::RatedEdgeList)
        fail("RatingThreshold signing applies only to rated edge lists");
      break;
    case SigningRule::BernoulliRandom:
      if (spec.format != InputFormat::UnsignedEdgeList)
        fail("BernoulliRandom signing applies only to unsigned edge lists");
      if (spec.p_pos < 0.0 || spec.p_pos > 1.0) fail("p_pos must be within [0, 1]");
      break;
  }
}

IngestResult parse_signed(std::istream& in, const IngestSpec& spec) {
  std::vector<SignedEdge> edges;
  IdMap left, right;
  for_each_record(in, spec.comment_prefixes, [&](const auto& tok, size_t line_no) {
    if (tok.size() != 3)
      throw ParseError(line_no, "expected 'u v s', got " + std::to_string(tok.size()) +
                                    " fields");
    edges.push_back({left.intern(tok[0]), right.intern(tok[1]), parse_sign(tok[2], line_no)});
  });
  return finish(std::move(edges), std::move(left), std::move(right));
}

IngestResult binarize_ratings(std::istream& in, const RatingRule& rule, const IngestSpec& spec) {
  std::vector<SignedEdge> edges;
  IdMap left, right;
  for_each_record(in, spec.comment_prefixes, [&](const auto& tok, size_t line_no) {
    if (tok.size() != 3)
      throw ParseError(line_no, "expected 'u v rating', got " + std::to_string(tok.size()) +
                                    " fields");
    double rating = parse_double(tok[2], line_no);
    edges.push_back({left.intern(tok[0]), right.intern(tok[1]), apply_rating_rule(rule, rating)});
  });
  return finish(std::move(edges), std::move(left), std::move(right));
}

IngestResult assign_random_signs(std::istream& in, double p_pos, uint64_t seed,
                                 const IngestSpec& spec) {
  if (p_pos < 0.0 || p_pos > 1.0) throw InvalidArgumentError("p_pos must be within [0, 1]");
  std::vector<SignedEdge> edges;
  IdMap left, right;
  CounterRng rng(seed, kSignStream);
  for_each_record(in, spec.comment_prefixes, [&](const auto& tok, size_t line_no) {
    if (tok.size() != 2)
      throw ParseError(line_no, "expected 'u v', got " + std::to_string(tok.size()) + " fields");
    Sign s = rng.next_bernoulli(p_pos) ? Sign::Positive : Sign::Negative;
    edges.push_back({left.intern(tok[0]), right.intern(tok[1]), s});
  });
  return finish(std::move(edges), std::move(left), std::move(right));
}

IngestResult ingest_graph(std::istream& in, const IngestSpec& spec) {
  validate(spec);
  switch (spec.format) {
    case InputFormat::Canonical: {
      IngestResult result;
      result.graph = read_canonical(in);
      return result;
    }
    case InputFormat::SignedEdgeList:
      return parse_signed(in, spec);
    case InputFormat::RatedEdgeList:
      return binarize_ratings(in, spec.rating, spec);
    case InputFormat::UnsignedEdgeList:
      return assign_random_signs(in, spec.p_pos, spec.seed, spec);
  }
  throw InvalidArgumentError("unknown input format");
}

void write_canonical(const SignedBipartiteGraph& g, std::ostream& out) {
  out << g.left_count() << ' ' << g.right_count() << ' ' << g.edge_count() << '\n';
  for (const SignedEdge& e : g.edges_sorted())
    out << e.u << ' ' << e.v << ' ' << (e.sign == Sign::Positive ? '1' : '0') << '\n';
}

SignedBipartiteGraph read_canonical(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing canonical header");
  auto header = split_ws(line);
  if (header.size() != 3) throw ParseError(1, "canonical header must be 'm n e'");
  uint32_t m = parse_u32(header[0], 1);
  uint32_t n = parse_u32(header[1], 1);
  uint64_t declared = parse_u64(header[2], 1);

  std::vector<SignedEdge> edges;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line, "")) continue;
    auto tok = split_ws(line);
    if (tok.size() != 3) throw ParseError(line_no, "canonical body line must be 'u v s'");
    uint32_t u = parse_u32(tok[0], line_no);
    uint32_t v = parse_u32(tok[1], line_no);
    Sign s;
    if (tok[2] == "1")
      s = Sign::Positive;
    else if (tok[2] == "0")
      s = Sign::Negative;
    else
      throw ParseError(line_no, "canonical sign must be 1 or 0");
    if (u >= m || v >= n)
      throw HeaderMismatchError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") exceeds declared sizes " + std::to_string(m) + "x" +
                                std::to_string(n));
    edges.push_back({u, v, s});
  }
  if (edges.size() != declared)
    throw HeaderMismatchError("header declares " + std::to_string(declared) + " edges but body has " +
                              std::to_string(edges.size()));
  return SignedBipartiteGraph::build(edges, m, n);
}

SignedBipartiteGraph generate_random_bigraph(const GenParams& params) {
  if (params.density.has_value() == params.target_edges.has_value())
    throw InvalidArgumentError("set exactly one of density / target_edges");
  if (params.p_pos < 0.0 || params.p_pos > 1.0)
    throw InvalidArgumentError("p_pos must be within [0, 1]");
  uint64_t cells = static_cast<uint64_t>(params.left_count) * params.right_count;

  std::vector<std::pair<uint32_t, uint32_t>> picked;
  if (params.density) {
    if (*params.density < 0.0 || *params.density > 1.0)
      throw InvalidArgumentError("density must be within [0, 1]");
    CounterRng rng(params.seed, kEdgeStream);
    for (uint32_t u = 0; u < params.left_count; ++u)
      for (uint32_t v = 0; v < params.right_count; ++v)
        if (rng.next_bernoulli(*params.density)) picked.push_back({u, v});
  } else {
    uint64_t target = *params.target_edges;
    if (target > cells)
      throw InfeasibleEdgeCountError("target edge count " + std::to_string(target) +
                                     " exceeds " + std::to_string(params.left_count) + "x" +
                                     std::to_string(params.right_count) + " = " +
                                     std::to_string(cells) + " cells");
    // Floyd's uniform k-subset over cell ordinals.
    CounterRng rng(params.seed, kEdgeStream);
    std::unordered_set<uint64_t> chosen;
    chosen.reserve(target * 2);
    for (uint64_t i = cells - target; i < cells; ++i) {
      uint64_t r = rng.next_below(i + 1);
      if (!chosen.insert(r).second) chosen.insert(i);
    }
    picked.reserve(target);
    for (uint64_t c : chosen)
      picked.push_back({static_cast<uint32_t>(c / params.right_count),
                        static_cast<uint32_t>(c % params.right_count)});
    std::sort(picked.begin(), picked.end());
  }

  CounterRng sign_rng(params.seed, kSignStream);
  std::vector<SignedEdge> edges;
  edges.reserve(picked.size());
  for (const auto& [u, v] : picked)
    edges.push_back(
        {u, v, sign_rng.next_bernoulli(params.p_pos) ? Sign::Positive : Sign::Negative});
  return SignedBipartiteGraph::build(edges, params.left_count, params.right_count);
}

}  // namespace sbbc
