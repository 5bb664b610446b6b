#include "sbbc/report.hpp"

#include <sstream>

#include <json.hpp>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

namespace sbbc {

uint64_t peak_rss_bytes(std::string* method) {
#if defined(__unix__) || defined(__APPLE__)
  struct rusage ru {};
  if (getrusage(RUSAGE_SELF, &ru) == 0) {
    if (method) *method = "rusage_maxrss";
#if defined(__APPLE__)
    return static_cast<uint64_t>(ru.ru_maxrss);  // bytes
#else
    return static_cast<uint64_t>(ru.ru_maxrss) * 1024;  // KiB
#endif
  }
#endif
  if (method) *method = "none";
  return 0;
}

std::string csv_header() {
  return "dataset,algo,p,q,count,wedges,subsets,intersections,bicliques_materialized,wall_ms,"
         "peak_mem_bytes,status";
}

std::string csv_row(const std::string& dataset, const CountReport& r) {
  std::ostringstream out;
  out << dataset << ',' << r.algorithm << ',' << r.p << ',' << r.q << ',';
  if (r.status == RunStatus::Ok) out << r.balanced_count.to_string();
  out << ',' << r.work.wedges << ',' << r.work.subsets << ',' << r.work.intersections << ','
      << r.work.bicliques_materialized << ',' << r.wall_ms << ',' << r.peak_mem_bytes << ','
      << status_name(r.status);
  return out.str();
}

std::string text_report(const std::string& dataset, const CountReport& r) {
  std::ostringstream out;
  out << "dataset:        " << dataset << '\n'
      << "algorithm:      " << r.algorithm << "  (p=" << r.p << ", q=" << r.q
      << ", anchor side: " << side_name(r.anchor_side) << ")\n";
  if (r.status == RunStatus::Ok)
    out << "balanced count: " << r.balanced_count.to_string() << '\n';
  else if (r.status == RunStatus::Inf)
    out << "balanced count: INF (time limit exceeded)\n";
  else
    out << "balanced count: error (" << r.error << ")\n";
  out << "work:           wedges=" << r.work.wedges << " subsets=" << r.work.subsets
      << " intersections=" << r.work.intersections
      << " bicliques_materialized=" << r.work.bicliques_materialized
      << " bicliques_rejected=" << r.work.bicliques_rejected << '\n'
      << "wall time:      " << r.wall_ms << " ms\n"
      << "peak memory:    " << r.peak_mem_bytes << " bytes (" << r.mem_method << ")\n"
      << "status:         " << status_name(r.status) << '\n';
  return out.str();
}

std::string json_report(const std::string& dataset, const CountReport& r) {
  nlohmann::json j;
  j["dataset"] = dataset;
  j["algo"] = r.algorithm;
  j["p"] = r.p;
  j["q"] = r.q;
  j["anchor_side"] = side_name(r.anchor_side);
  if (r.status == RunStatus::Ok) j["count"] = r.balanced_count.to_string();
  j["wedges"] = r.work.wedges;
  j["subsets"] = r.work.subsets;
  j["intersections"] = r.work.intersections;
  j["bicliques_materialized"] = r.work.bicliques_materialized;
  j["bicliques_rejected"] = r.work.bicliques_rejected;
  j["wall_ms"] = r.wall_ms;
  j["peak_mem_bytes"] = r.peak_mem_bytes;
  j["mem_method"] = r.mem_method;
  j["status"] = status_name(r.status);
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

}  // namespace sbbc
