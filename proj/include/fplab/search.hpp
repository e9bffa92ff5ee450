#ifndef FPLAB_SEARCH_HPP
#define FPLAB_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fplab/families.hpp"
#include "fplab/fixed_point_data.hpp"
#include "fplab/verdict.hpp"

namespace fplab {

/// The fixed default filter order of the pipeline.
const std::vector<std::string>& default_filter_order();

struct SearchSpec {
  int n = 1;
  int k = 1;                       // fixed point count
  std::int64_t max_weight = 1;    // bound on |weight| before rescaling
  std::optional<int> todd;         // restrict profiles to N^0 == todd
  bool full_eval = false;          // evaluate all filters even after a failure
  std::vector<std::string> enabled_filters = default_filter_order();
  int threads = 0;                 // 0 = auto (hardware, capped by FPLAB_THREADS)
};

struct FilterReport {
  std::vector<std::pair<std::string, FilterVerdict>> entries;
  bool survivor = true;  // no filter failed
};

/// Runs the enabled filters in the fixed order
///   balance, adjacency, rigidity, abbv, semifree, isotropy, multigraph,
///   largest-weight, extremes
/// short-circuiting on the first failure unless full_eval is set.
FilterReport run_pipeline(const FixedPointData& d, const SearchSpec& spec);

/// Every canonical class of data with k points of n nonzero weights in
/// [-W, W], collective gcd 1, balanced weights, and an N-profile satisfying
/// N^i = N^{n-i} plus the adjacency condition. Emitted in a fixed
/// deterministic order, exactly once per (reversal x relabelling) class.
void enumerate_candidates(const SearchSpec& spec,
                          const std::function<void(const FixedPointData&)>& emit);
std::vector<FixedPointData> enumerate_candidates(const SearchSpec& spec);

struct SurvivorRecord {
  FixedPointData data;
  FilterReport report;
  std::vector<FamilyMatch> matches;
};

struct ClassificationReport {
  std::vector<SurvivorRecord> survivors;
  std::size_t candidate_count = 0;
  std::size_t unclassified_count = 0;
};

/// Runs the pipeline over every candidate and matches the survivors against
/// the families. Deterministic: the report is identical for any thread
/// count.
ClassificationReport classify_all(const SearchSpec& spec);

std::string survivor_to_json(const SurvivorRecord& record);
std::string report_to_jsonl(const ClassificationReport& report);

int resolve_thread_count(int requested);

}  // namespace fplab

#endif
