#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sbbc/graph.hpp"
#include "sbbc/rng.hpp"

namespace sbbc {

enum class InputFormat : uint8_t { Canonical, SignedEdgeList, RatedEdgeList, UnsignedEdgeList };
enum class SigningRule : uint8_t { Native, RatingThreshold, BernoulliRandom };

// Rating binarization. Two flavors exist because real rating datasets use
// both: a 10-star source marks "greater than 6" positive (strict), a 5-star
// source marks "4 or higher" positive (inclusive). Every edge gets a sign;
// there is no neutral band.
struct RatingRule {
  double pos_min = 4.0;
  bool strict = false;  // true: rating > pos_min; false: rating >= pos_min
};

inline constexpr RatingRule kJesterRule{6.0, true};
inline constexpr RatingRule kEpinionsRule{4.0, false};

inline Sign apply_rating_rule(const RatingRule& r, double rating) {
  bool pos = r.strict ? rating > r.pos_min : rating >= r.pos_min;
  return pos ? Sign::Positive : Sign::Negative;
}

struct IngestSpec {
  InputFormat format = InputFormat::SignedEdgeList;
  SigningRule rule = SigningRule::Native;
  RatingRule rating;
  double p_pos = 0.7;     // BernoulliRandom
  uint64_t seed = 0;      // BernoulliRandom
  std::string comment_prefixes = "#%";
};

// format/rule pairing: Native <-> SignedEdgeList (or Canonical),
// RatingThreshold <-> RatedEdgeList, BernoulliRandom <-> UnsignedEdgeList.
void validate(const IngestSpec& spec);

// External vertex ids are arbitrary tokens; dense indices are assigned per
// side in first-seen order. The mapping rides along so it can be emitted next
// to a canonical file. Canonical inputs use raw indices (both vectors empty).
struct IngestResult {
  SignedBipartiteGraph graph;
  std::vector<std::string> left_ids;   // dense index -> external id
  std::vector<std::string> right_ids;
};

// "u v s" lines, s in {1,0,+,-,+1,-1}; comment lines skipped.
IngestResult parse_signed(std::istream& in, const IngestSpec& spec = {});

// "u v rating" lines; sign from the rating rule.
IngestResult binarize_ratings(std::istream& in, const RatingRule& rule,
                              const IngestSpec& spec = {});

// "u v" lines; each edge drawn Positive with probability p_pos from the
// SplitMix64 counter stream (seed, stream=1), draw order = input edge order.
// Identical (bytes, seed) always yields identical output.
IngestResult assign_random_signs(std::istream& in, double p_pos, uint64_t seed,
                                 const IngestSpec& spec = {});

// Dispatch on spec.format.
IngestResult ingest_graph(std::istream& in, const IngestSpec& spec);

// Canonical format: header "m n e", then exactly e lines "u v s" with
// s in {1,0}, sorted by (u, v) ascending — byte-reproducible.
void write_canonical(const SignedBipartiteGraph& g, std::ostream& out);
SignedBipartiteGraph read_canonical(std::istream& in);

// Seed-deterministic random bipartite graph; exactly one of density /
// target_edges must be set. Signs drawn in (u,v)-sorted edge order from
// stream 1; edge selection uses stream 0.
struct GenParams {
  uint32_t left_count = 0;
  uint32_t right_count = 0;
  std::optional<double> density;
  std::optional<uint64_t> target_edges;
  double p_pos = 1.0;
  uint64_t seed = 0;
};

SignedBipartiteGraph generate_random_bigraph(const GenParams& params);

}  // namespace sbbc
