#include "sbbc/count.hpp"

#include <chrono>

#include "sbbc/baseline.hpp"
#include "sbbc/bbvp.hpp"
#include "sbbc/bbwc.hpp"
#include "sbbc/oracle.hpp"

namespace sbbc {

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "oracle") return Algorithm::Oracle;
  if (name == "baseline") return Algorithm::Baseline;
  if (name == "bbwc") return Algorithm::Bbwc;
  if (name == "bbvp") return Algorithm::Bbvp;
  return std::nullopt;
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Baseline: return "baseline";
    case Algorithm::Bbwc: return "bbwc";
    default: return "bbvp";
  }
}

CountReport run_count(Algorithm algo, const SignedBipartiteGraph& g, uint32_t p, uint32_t q,
                      const RunOptions& opts) {
  require_pq(p, q);
  CountReport r;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (algo) {
      case Algorithm::Oracle: {
        // The oracle has no anchor loop of its own; keep the report shape.
        r.algorithm = "oracle";
        r.p = p;
        r.q = q;
        OracleLimits limits;
        limits.time_limit = opts.time_limit;
        r.balanced_count = count_balanced_bruteforce(g, p, q, limits);
        break;
      }
      case Algorithm::Baseline:
        r = count_balanced_baseline(g, p, q, opts);
        break;
      case Algorithm::Bbwc:
        r = count_balanced_bbwc(g, p, q, opts);
        break;
      case Algorithm::Bbvp:
        r = count_balanced_bbvp(g, p, q, opts);
        break;
    }
    r.status = RunStatus::Ok;
  } catch (const TimeLimitError&) {
    r.algorithm = algorithm_name(algo);
    r.p = p;
    r.q = q;
    r.status = RunStatus::Inf;
  } catch (const CountOverflowError& e) {
    r.algorithm = algorithm_name(algo);
    r.p = p;
    r.q = q;
    r.status = RunStatus::Error;
    r.error_kind = ErrorKind::Overflow;
    r.error = e.what();
  } catch (const SizeGuardError& e) {
    r.algorithm = algorithm_name(algo);
    r.p = p;
    r.q = q;
    r.status = RunStatus::Error;
    r.error_kind = ErrorKind::SizeGuard;
    r.error = e.what();
  }
  auto end = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
  r.peak_mem_bytes = peak_rss_bytes(&r.mem_method);
  return r;
}

}  // namespace sbbc
