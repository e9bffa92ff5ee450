#include "fplab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "fplab/genus.hpp"
#include "fplab/isotropy.hpp"
#include "fplab/localization.hpp"
#include "fplab/multigraph.hpp"

namespace fplab {

const std::vector<std::string>& default_filter_order() {
  static const std::vector<std::string> order = {
      "balance",  "adjacency",  "rigidity",       "abbv",     "semifree",
      "isotropy", "multigraph", "largest-weight", "extremes",
  };
  return order;
}

namespace {

FilterVerdict run_filter(const std::string& name, const FixedPointData& d) {
  if (name == "balance") return weight_balance_check(d);
  if (name == "adjacency") return adjacency_check(d);
  if (name == "rigidity") return rigidity_check(d);
  if (name == "abbv") return abbv_check(d);
  if (name == "semifree") return semifree_check(d);
  if (name == "isotropy") return isotropy_count_check(d);
  if (name == "multigraph") return multigraph_check(d);
  if (name == "largest-weight") return largest_weight_check(d);
  if (name == "extremes") return exponent_extremes_check(d);
  throw std::invalid_argument("unknown filter '" + name + "'");
}

bool filter_enabled(const SearchSpec& spec, const std::string& name) {
  return std::find(spec.enabled_filters.begin(), spec.enabled_filters.end(), name) !=
         spec.enabled_filters.end();
}

// All profiles (N^0..N^n) with sum k, N^i = N^{n-i}, some consecutive pair
// nonzero, and optionally N^0 pinned to the requested Todd genus.
std::vector<std::vector<int>> admissible_profiles(const SearchSpec& spec) {
  std::vector<std::vector<int>> out;
  std::vector<int> profile(static_cast<size_t>(spec.n) + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    int j = spec.n - i;
    if (i > j) {
      if (used != spec.k) return;
      bool adjacent = false;
      for (int t = 0; t + 1 <= spec.n; ++t)
        if (profile[static_cast<size_t>(t)] != 0 && profile[static_cast<size_t>(t) + 1] != 0)
          adjacent = true;
      if (!adjacent) return;
      if (spec.todd && profile[0] != *spec.todd) return;
      out.push_back(profile);
      return;
    }
    int slots = (i == j) ? 1 : 2;
    for (int v = 0; used + slots * v <= spec.k; ++v) {
      profile[static_cast<size_t>(i)] = v;
      profile[static_cast<size_t>(j)] = v;
      rec(i + 1, used + slots * v);
    }
    profile[static_cast<size_t>(i)] = 0;
    profile[static_cast<size_t>(j)] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// All sorted weight vectors of length n over [-W,W]\{0} with exactly
// `negatives` negative entries, in increasing lexicographic order.
std::vector<std::vector<std::int64_t>> point_candidates(int n, int negatives, std::int64_t W) {
  std::vector<std::vector<std::int64_t>> negs, poss, out;
  std::function<void(int, std::int64_t, std::vector<std::int64_t>&,
                     std::vector<std::vector<std::int64_t>>&)>
      multisets = [&](int size, std::int64_t from, std::vector<std::int64_t>& cur,
                      std::vector<std::vector<std::int64_t>>& sink) {
        if (size == 0) {
          sink.push_back(cur);
          return;
        }
        for (std::int64_t v = from; v <= W; ++v) {
          cur.push_back(v);
          multisets(size - 1, v, cur, sink);
          cur.pop_back();
        }
      };
  std::vector<std::int64_t> scratch;
  multisets(negatives, 1, scratch, negs);
  multisets(n - negatives, 1, scratch, poss);
  for (const auto& nv : negs) {
    for (const auto& pv : poss) {
      std::vector<std::int64_t> weights;
      weights.reserve(static_cast<size_t>(n));
      // negatives ascending means descending absolute value
      for (auto it = nv.rbegin(); it != nv.rend(); ++it) weights.push_back(-*it);
      for (std::int64_t v : pv) weights.push_back(v);
      out.push_back(std::move(weights));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct GenerationState {
  const SearchSpec* spec;
  const std::function<void(const FixedPointData&)>* emit;
  std::vector<std::vector<std::int64_t>> chosen;
  std::map<std::int64_t, long> surplus;  // value -> (+ occurrences) - (- occurrences)
  long imbalance = 0;                    // sum of |surplus|
};

void push_weights(GenerationState& st, const std::vector<std::int64_t>& ws, int dir) {
  for (std::int64_t w : ws) {
    long& s = st.surplus[std::llabs(w)];
    st.imbalance -= std::labs(s);
    s += dir * (w > 0 ? 1 : -1);
    st.imbalance += std::labs(s);
  }
}

void finish_candidate(GenerationState& st) {
  const SearchSpec& spec = *st.spec;
  if (st.imbalance != 0) return;
  std::int64_t g = 0;
  for (const auto& ws : st.chosen)
    for (std::int64_t w : ws) g = std::gcd(g, std::llabs(w));
  if (g != 1) return;  // the rescaled class appears at lower W
  FixedPointData d = make_data(spec.n, st.chosen);
  // Points are generated in sorted-representative order; keep only the
  // class representative that is <= its reversal.
  FixedPointData rev = sorted_representative(reverse_data(d));
  if (serialize_data(d) > serialize_data(rev)) return;
  (*st.emit)(d);
}

// Points within one n_p block are nondecreasing; blocks come in ascending
// n_p order, so the assembled data is already its own sorted representative.
void fill_blocks(GenerationState& st,
                 const std::vector<std::pair<int, int>>& blocks,  // (negatives, count)
                 size_t block_index,
                 const std::vector<std::vector<std::vector<std::int64_t>>>& candidates,
                 size_t within, size_t from) {
  const SearchSpec& spec = *st.spec;
  if (block_index == blocks.size()) {
    finish_candidate(st);
    return;
  }
  if (within == static_cast<size_t>(blocks[block_index].second)) {
    fill_blocks(st, blocks, block_index + 1, candidates, 0, 0);
    return;
  }
  // Each remaining weight slot can repair at most one unit of imbalance.
  long remaining = 0;
  for (size_t b = block_index; b < blocks.size(); ++b) {
    long pts = blocks[b].second - (b == block_index ? static_cast<long>(within) : 0);
    remaining += pts * spec.n;
  }
  if (st.imbalance > remaining) return;

  const auto& pool = candidates[block_index];
  for (size_t i = from; i < pool.size(); ++i) {
    st.chosen.push_back(pool[i]);
    push_weights(st, pool[i], +1);
    fill_blocks(st, blocks, block_index, candidates, within + 1, i);
    push_weights(st, pool[i], -1);
    st.chosen.pop_back();
  }
}

}  // namespace

FilterReport run_pipeline(const FixedPointData& d, const SearchSpec& spec) {
  FilterReport report;
  for (const std::string& name : default_filter_order()) {
    if (!filter_enabled(spec, name)) continue;
    FilterVerdict v = run_filter(name, d);
    bool failed = v.failed();
    report.entries.emplace_back(name, std::move(v));
    if (failed) {
      report.survivor = false;
      if (!spec.full_eval) break;
    }
  }
  return report;
}

void enumerate_candidates(const SearchSpec& spec,
                          const std::function<void(const FixedPointData&)>& emit) {
  if (spec.n < 1 || spec.k < 1 || spec.max_weight < 1)
    throw std::invalid_argument("need n >= 1, k >= 1, W >= 1");
  for (const auto& profile : admissible_profiles(spec)) {
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i <= spec.n; ++i)
      if (profile[static_cast<size_t>(i)] > 0)
        blocks.emplace_back(i, profile[static_cast<size_t>(i)]);
    std::vector<std::vector<std::vector<std::int64_t>>> candidates;
    candidates.reserve(blocks.size());
    for (const auto& block : blocks)
      candidates.push_back(point_candidates(spec.n, block.first, spec.max_weight));
    GenerationState st;
    st.spec = &spec;
    st.emit = &emit;
    fill_blocks(st, blocks, 0, candidates, 0, 0);
  }
}

std::vector<FixedPointData> enumerate_candidates(const SearchSpec& spec) {
  std::vector<FixedPointData> out;
  enumerate_candidates(spec, [&](const FixedPointData& d) { out.push_back(d); });
  return out;
}

int resolve_thread_count(int requested) {
  int threads = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* cap = std::getenv("FPLAB_THREADS")) {
    int c = std::atoi(cap);
    if (c >= 1) threads = std::min(threads, c);
  }
  return threads;
}

ClassificationReport classify_all(const SearchSpec& spec) {
  std::vector<FixedPointData> candidates = enumerate_candidates(spec);
  ClassificationReport report;
  report.candidate_count = candidates.size();

  std::vector<std::optional<FilterReport>> outcomes(candidates.size());
  int threads = resolve_thread_count(spec.threads);
  threads = std::min(threads, static_cast<int>(std::max<std::size_t>(candidates.size(), 1)));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= candidates.size()) break;
      FilterReport r = run_pipeline(candidates[i], spec);
      if (r.survivor) outcomes[i] = std::move(r);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Merge in generation order: identical output for every thread count.
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!outcomes[i]) continue;
    SurvivorRecord rec;
    rec.data = candidates[i];
    rec.report = std::move(*outcomes[i]);
    rec.matches = match_family(rec.data);
    if (rec.matches.empty()) ++report.unclassified_count;
    report.survivors.push_back(std::move(rec));
  }
  return report;
}

std::string survivor_to_json(const SurvivorRecord& record) {
  nlohmann::ordered_json j;
  j["data"] = nlohmann::ordered_json::parse(serialize_data(record.data));
  nlohmann::ordered_json filters = nlohmann::ordered_json::object();
  for (const auto& [name, verdict] : record.report.entries) {
    nlohmann::ordered_json v;
    v["status"] = verdict.status_name();
    if (!verdict.certificate.empty()) v["certificate"] = verdict.certificate;
    filters[name] = std::move(v);
  }
  j["filters"] = std::move(filters);
  nlohmann::ordered_json matches = nlohmann::ordered_json::array();
  for (const auto& m : record.matches) {
    nlohmann::ordered_json jm;
    jm["family"] = family_name(m.family);
    jm["params"] = m.params;
    jm["orientation"] = m.orientation == Orientation::Forward ? "forward" : "reversed";
    matches.push_back(std::move(jm));
  }
  j["matches"] = std::move(matches);
  return j.dump();
}

std::string report_to_jsonl(const ClassificationReport& report) {
  std::string out;
  for (const auto& rec : report.survivors) {
    out += survivor_to_json(rec);
    out += "\n";
  }
  return out;
}

}  // namespace fplab
