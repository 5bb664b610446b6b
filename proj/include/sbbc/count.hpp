#pragma once

#include <optional>
#include <string>

#include "sbbc/graph.hpp"
#include "sbbc/report.hpp"

namespace sbbc {

enum class Algorithm : uint8_t { Oracle, Baseline, Bbwc, Bbvp };

std::optional<Algorithm> algorithm_from_name(const std::string& name);
const char* algorithm_name(Algorithm a);

// Runs one counter with wall-clock timing and peak-memory sampling. A time
// limit expiry yields status Inf (no count); a count overflow yields status
// Error with the message preserved. Argument validation errors propagate.
CountReport run_count(Algorithm algo, const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                      const RunOptions& opts = {});

}  // namespace sbbc
