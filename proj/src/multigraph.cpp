#include "fplab/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace fplab {

namespace {

// Per weight value, the pairing options form an integer matrix problem:
// M[p][q] = number of w-edges from p to q, with row sums the +w counts,
// column sums the -w counts, and support restricted to the admissible
// (p,q) cells. Enumerating matrices (instead of slot bijections) is what
// deduplicates multigraphs that differ only by permuting identical edges.
struct WeightProblem {
  std::int64_t w = 0;
  std::vector<int> row;                     // +w count per point
  std::vector<int> col;                     // -w count per point
  std::vector<std::vector<char>> allowed;   // [from][to]
};

std::vector<std::int64_t> multiset_mod(const std::vector<std::int64_t>& weights,
                                       std::int64_t w) {
  std::vector<std::int64_t> out;
  out.reserve(weights.size());
  for (std::int64_t x : weights) out.push_back(((x % w) + w) % w);
  std::sort(out.begin(), out.end());
  return out;
}

bool congruent_mod(const FixedPoint& a, const FixedPoint& b, std::int64_t w) {
  return multiset_mod(a.weights, w) == multiset_mod(b.weights, w);
}

std::int64_t threshold_or_max(const FixedPointData& d) {
  std::vector<std::int64_t> positives;
  for (const auto& p : d.points)
    for (std::int64_t w : p.weights)
      if (w > 0) positives.push_back(w);
  if (positives.size() < 2) return std::numeric_limits<std::int64_t>::max();
  std::sort(positives.begin(), positives.end());
  return positives[1];
}

std::vector<WeightProblem> build_problems(const FixedPointData& d) {
  const int k = d.point_count();
  std::int64_t threshold = threshold_or_max(d);
  std::vector<int> negcounts(static_cast<size_t>(k));
  for (int p = 0; p < k; ++p)
    negcounts[static_cast<size_t>(p)] = negative_count(d.points[static_cast<size_t>(p)].weights);

  std::map<std::int64_t, WeightProblem> by_weight;
  for (int p = 0; p < k; ++p) {
    for (std::int64_t x : d.points[static_cast<size_t>(p)].weights) {
      std::int64_t w = std::llabs(x);
      auto& prob = by_weight[w];
      if (prob.row.empty()) {
        prob.w = w;
        prob.row.assign(static_cast<size_t>(k), 0);
        prob.col.assign(static_cast<size_t>(k), 0);
      }
      (x > 0 ? prob.row : prob.col)[static_cast<size_t>(p)] += 1;
    }
  }
  std::vector<WeightProblem> problems;
  for (auto& [w, prob] : by_weight) {
    prob.allowed.assign(static_cast<size_t>(k), std::vector<char>(static_cast<size_t>(k), 0));
    for (int p = 0; p < k; ++p) {
      if (prob.row[static_cast<size_t>(p)] == 0) continue;
      for (int q = 0; q < k; ++q) {
        if (q == p || prob.col[static_cast<size_t>(q)] == 0) continue;
        bool ok = (w <= threshold)
                      ? negcounts[static_cast<size_t>(p)] + 1 == negcounts[static_cast<size_t>(q)]
                      : congruent_mod(d.points[static_cast<size_t>(p)],
                                      d.points[static_cast<size_t>(q)], w);
        prob.allowed[static_cast<size_t>(p)][static_cast<size_t>(q)] = ok ? 1 : 0;
      }
    }
    problems.push_back(std::move(prob));
  }
  // Most-constrained first: large weights carry the congruence clause.
  std::sort(problems.begin(), problems.end(),
            [](const WeightProblem& a, const WeightProblem& b) { return a.w > b.w; });
  return problems;
}

using Matrix = std::vector<std::vector<int>>;

// Enumerates matrices row by row; distribute_row places row_remaining edges
// of row p into columns >= q. Stops early when stop_at_first is set.
bool solve_rows(const WeightProblem& prob, int p, Matrix& m, std::vector<int>& colrem,
                std::vector<Matrix>& out, bool stop_at_first);

bool distribute_row(const WeightProblem& prob, int p, int q, int row_remaining, Matrix& m,
                    std::vector<int>& colrem, std::vector<Matrix>& out, bool stop_at_first) {
  const int k = static_cast<int>(prob.row.size());
  if (row_remaining == 0)
    return solve_rows(prob, p + 1, m, colrem, out, stop_at_first);
  if (q == k) return false;
  // Capacity left in columns q..k-1 must cover the remainder.
  int cap = 0;
  for (int j = q; j < k; ++j)
    if (prob.allowed[static_cast<size_t>(p)][static_cast<size_t>(j)]) cap += colrem[static_cast<size_t>(j)];
  if (cap < row_remaining) return false;

  int here = prob.allowed[static_cast<size_t>(p)][static_cast<size_t>(q)]
                 ? std::min(row_remaining, colrem[static_cast<size_t>(q)])
                 : 0;
  bool found = false;
  for (int c = here; c >= 0; --c) {
    m[static_cast<size_t>(p)][static_cast<size_t>(q)] = c;
    colrem[static_cast<size_t>(q)] -= c;
    if (distribute_row(prob, p, q + 1, row_remaining - c, m, colrem, out, stop_at_first)) {
      found = true;
    }
    colrem[static_cast<size_t>(q)] += c;
    m[static_cast<size_t>(p)][static_cast<size_t>(q)] = 0;
    if (found && stop_at_first) return true;
  }
  return found;
}

bool solve_rows(const WeightProblem& prob, int p, Matrix& m, std::vector<int>& colrem,
                std::vector<Matrix>& out, bool stop_at_first) {
  const int k = static_cast<int>(prob.row.size());
  if (p == k) {
    out.push_back(m);
    return true;
  }
  if (prob.row[static_cast<size_t>(p)] == 0)
    return solve_rows(prob, p + 1, m, colrem, out, stop_at_first);
  return distribute_row(prob, p, 0, prob.row[static_cast<size_t>(p)], m, colrem, out,
                        stop_at_first);
}

std::vector<Matrix> weight_options(const WeightProblem& prob, bool stop_at_first) {
  const size_t k = prob.row.size();
  Matrix m(k, std::vector<int>(k, 0));
  std::vector<int> colrem = prob.col;
  std::vector<Matrix> out;
  solve_rows(prob, 0, m, colrem, out, stop_at_first);
  return out;
}

}  // namespace

std::int64_t small_weight_threshold(const FixedPointData& d) {
  std::vector<std::int64_t> positives;
  for (const auto& p : d.points)
    for (std::int64_t w : p.weights)
      if (w > 0) positives.push_back(w);
  if (positives.size() < 2)
    throw FewerThanTwoPositive("need at least two positive weight occurrences, have " +
                               std::to_string(positives.size()));
  std::sort(positives.begin(), positives.end());
  return positives[1];
}

std::vector<Multigraph> enumerate_admissible(const FixedPointData& d) {
  std::vector<Multigraph> result;
  if (!weight_balance_check(d).passed()) return result;

  std::vector<WeightProblem> problems = build_problems(d);
  std::vector<std::vector<Matrix>> options;
  options.reserve(problems.size());
  for (const auto& prob : problems) {
    std::vector<Matrix> opts = weight_options(prob, false);
    if (opts.empty()) return result;
    options.push_back(std::move(opts));
  }

  std::vector<std::string> labels;
  for (const auto& p : d.points) labels.push_back(p.label);

  // The clauses are per-edge, so choices for distinct weight values are
  // independent and the admissible set is their cartesian product.
  std::vector<size_t> choice(problems.size(), 0);
  while (true) {
    Multigraph g;
    g.vertices = labels;
    for (size_t i = 0; i < problems.size(); ++i) {
      const Matrix& m = options[i][choice[i]];
      for (size_t p = 0; p < m.size(); ++p)
        for (size_t q = 0; q < m.size(); ++q)
          for (int c = 0; c < m[p][q]; ++c)
            g.edges.push_back({static_cast<int>(p), static_cast<int>(q), problems[i].w});
    }
    std::sort(g.edges.begin(), g.edges.end());
    result.push_back(std::move(g));

    size_t i = 0;
    for (; i < problems.size(); ++i) {
      if (++choice[i] < options[i].size()) break;
      choice[i] = 0;
    }
    if (i == problems.size()) break;
  }
  std::sort(result.begin(), result.end(),
            [](const Multigraph& a, const Multigraph& b) { return a.edges < b.edges; });
  return result;
}

bool has_admissible(const FixedPointData& d) {
  if (!weight_balance_check(d).passed()) return false;
  for (const auto& prob : build_problems(d))
    if (weight_options(prob, true).empty()) return false;
  return true;
}

FilterVerdict multigraph_check(const FixedPointData& d) {
  FilterVerdict balance = weight_balance_check(d);
  if (!balance.passed())
    return FilterVerdict::fail("weights are not balanced: " + balance.certificate);
  for (const auto& prob : build_problems(d)) {
    if (weight_options(prob, true).empty()) {
      std::ostringstream os;
      os << "no admissible pairing for weight value w=" << prob.w;
      return FilterVerdict::fail(os.str());
    }
  }
  return FilterVerdict::pass();
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream os;
  os << "digraph multigraph {\n";
  for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
  for (const auto& e : g.edges) {
    os << "  \"" << g.vertices[static_cast<size_t>(e.from)] << "\" -> \""
       << g.vertices[static_cast<size_t>(e.to)] << "\" [label=\"" << e.weight << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fplab
