#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbbc/bigcount.hpp"
#include "sbbc/types.hpp"

namespace sbbc {

enum class RunStatus : uint8_t { Ok, Inf, Error };

inline const char* status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Inf: return "inf";
    default: return "error";
  }
}

enum class AnchorSide : uint8_t { Auto, Left, Right };

// Knobs shared by every counting algorithm. Defaults reproduce the plain
// single-threaded run described by the algorithms themselves.
struct RunOptions {
  AnchorSide anchor_side = AnchorSide::Auto;
  uint32_t threads = 1;
  // Cooperative deadline, checked every check_interval anchors.
  std::optional<std::chrono::steady_clock::duration> time_limit;
  uint32_t check_interval = 64;
  // When set, reports carry per-anchor wedge/subset counters (anchor side
  // indexing). Costs memory proportional to the anchor side; off by default.
  bool collect_per_anchor = false;
};

struct WorkCounters {
  uint64_t wedges = 0;                  // signed p-wedges enumerated (BBWC)
  uint64_t subsets = 0;                 // (p-1)-subsets enumerated (BBVP)
  uint64_t intersections = 0;           // pairwise sorted-merge passes
  uint64_t bicliques_materialized = 0;  // explicit (p,q)-bicliques built
  uint64_t bicliques_rejected = 0;      // materialized but unbalanced

  WorkCounters& operator+=(const WorkCounters& o) {
    wedges += o.wedges;
    subsets += o.subsets;
    intersections += o.intersections;
    bicliques_materialized += o.bicliques_materialized;
    bicliques_rejected += o.bicliques_rejected;
    return *this;
  }
};

struct AnchorWork {
  uint64_t wedges = 0;
  uint64_t subsets = 0;
};

enum class ErrorKind : uint8_t { None, Overflow, SizeGuard };

struct CountReport {
  std::string algorithm;
  uint32_t p = 0;
  uint32_t q = 0;
  Side anchor_side = Side::LeftU;
  BigCount balanced_count;
  WorkCounters work;
  double wall_ms = 0.0;
  uint64_t peak_mem_bytes = 0;
  std::string mem_method = "none";
  RunStatus status = RunStatus::Ok;
  ErrorKind error_kind = ErrorKind::None;
  std::string error;  // set when status == Error
  // Indexed by anchor-side vertex; filled only under collect_per_anchor.
  std::vector<AnchorWork> per_anchor;
};

// Peak resident set of this process, in bytes, plus a label for how it was
// measured ("rusage_maxrss" on POSIX, "none" elsewhere).
uint64_t peak_rss_bytes(std::string* method = nullptr);

// Fixed CSV schema, in order.
std::string csv_header();
std::string csv_row(const std::string& dataset, const CountReport& r);

// Human-readable multi-line rendering.
std::string text_report(const std::string& dataset, const CountReport& r);

// Single-report JSON object.
std::string json_report(const std::string& dataset, const CountReport& r);

}  // namespace sbbc
