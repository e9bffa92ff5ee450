#include "fplab/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace fplab {

namespace {

FixedPointData effective_form(const FixedPointData& d) {
  std::int64_t g = collective_gcd(d);
  if (g <= 1) return d;
  FixedPointData out = d;
  for (auto& p : out.points)
    for (auto& w : p.weights) w /= g;
  return out;
}

std::int64_t max_abs_weight(const FixedPointData& d) {
  std::int64_t m = 0;
  for (const auto& p : d.points)
    for (std::int64_t w : p.weights) m = std::max<std::int64_t>(m, std::llabs(w));
  return m;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string profile_str(const std::vector<int>& profile) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < profile.size(); ++i) os << (i ? "," : "") << profile[i];
  os << ")";
  return os.str();
}

}  // namespace

IsotropyTable isotropy_table(const FixedPointData& d) {
  IsotropyTable table;
  std::int64_t maxw = max_abs_weight(d);
  for (std::int64_t w = 2; w <= maxw; ++w) {
    std::vector<DivisibilityCounts> row;
    row.reserve(d.points.size());
    bool any = false;
    for (const auto& p : d.points) {
      DivisibilityCounts c;
      for (std::int64_t x : p.weights) {
        if (x % w == 0) {
          ++c.total;
          (x > 0 ? c.positive : c.negative) += 1;
          any = true;
        }
      }
      row.push_back(c);
    }
    if (any) table.rows.emplace(w, std::move(row));
  }
  return table;
}

FilterVerdict isotropy_count_check(const FixedPointData& d) {
  FixedPointData eff = effective_form(d);
  IsotropyTable table = isotropy_table(eff);
  for (const auto& [w, row] : table.rows) {
    int with1 = 0, with2 = 0, with3 = 0, with4 = 0;
    bool minus0 = false, minus1 = false, minus2 = false;
    for (const auto& c : row) {
      if (c.total == 1) ++with1;
      if (c.total == 2) {
        ++with2;
        if (c.negative == 0) minus0 = true;
        if (c.negative == 1) minus1 = true;
        if (c.negative == 2) minus2 = true;
      }
      if (c.total == 3) ++with3;
      if (c.total >= 4) ++with4;
    }
    std::ostringstream os;
    os << "w=" << w << ": ";
    if (with1 == 1) {
      os << "exactly one point has m^w=1, need at least 2";
      return FilterVerdict::fail(os.str());
    }
    if (with3 == 1) {
      os << "exactly one point has m^w=3, need at least 2";
      return FilterVerdict::fail(os.str());
    }
    if (with2 > 0 && with2 < 3) {
      os << with2 << " point(s) have m^w=2, need at least 3";
      return FilterVerdict::fail(os.str());
    }
    if (with2 > 0 && !(minus0 && minus1 && minus2)) {
      os << "points with m^w=2 realize m^w(-) values {";
      bool first = true;
      for (int v : {0, 1, 2})
        if ((v == 0 && minus0) || (v == 1 && minus1) || (v == 2 && minus2)) {
          os << (first ? "" : ",") << v;
          first = false;
        }
      os << "}, need all of {0,1,2}";
      return FilterVerdict::fail(os.str());
    }
    if (with4 > 0 && with4 < 4) {
      os << with4 << " point(s) have m^w>=4, need at least 4";
      return FilterVerdict::fail(os.str());
    }
  }
  return FilterVerdict::pass();
}

FilterVerdict semifree_check(const FixedPointData& d) {
  std::set<std::int64_t> abs_values;
  for (const auto& p : d.points)
    for (std::int64_t w : p.weights) abs_values.insert(std::llabs(w));
  if (abs_values.size() != 1) return FilterVerdict::pass();  // vacuous

  int k_points = d.point_count();
  long long block = 1LL << d.n;
  if (k_points % block != 0) {
    std::ostringstream os;
    os << k_points << " fixed points is not a multiple of 2^" << d.n << "=" << block;
    return FilterVerdict::fail(os.str());
  }
  long long k = k_points / block;
  std::vector<int> profile = n_profile(d);
  for (int i = 0; i <= d.n; ++i) {
    long long expected = k * binomial(d.n, i);
    if (profile[static_cast<size_t>(i)] != expected) {
      std::ostringstream os;
      os << "N^" << i << "=" << profile[static_cast<size_t>(i)] << " but k*C(n,i)="
         << expected << " with k=" << k;
      return FilterVerdict::fail(os.str());
    }
  }
  return FilterVerdict::pass();
}

FilterVerdict largest_weight_check(const FixedPointData& d) {
  if (d.n != 3 || d.point_count() != 4)
    return FilterVerdict::skipped("applies to 6-dimensional data with 4 fixed points");
  std::vector<int> profile = n_profile(d);
  bool todd1 = profile == std::vector<int>{1, 1, 1, 1};
  bool todd0 = profile == std::vector<int>{0, 2, 2, 0};
  if (!todd1 && !todd0)
    return FilterVerdict::skipped("profile " + profile_str(profile) +
                                  " is not (1,1,1,1) or (0,2,2,0)");
  FixedPointData eff = effective_form(d);
  std::int64_t l = max_abs_weight(eff);
  if (l <= 1)
    return FilterVerdict::fail("largest weight is 1; such an action must have a weight > 1");
  for (const auto& p : eff.points) {
    int multiples = 0;
    for (std::int64_t w : p.weights)
      if (w % l == 0) ++multiples;
    if (multiples >= 2) {
      std::ostringstream os;
      os << "point '" << p.label << "' has " << multiples
         << " weights divisible by the largest weight l=" << l;
      return FilterVerdict::fail(os.str());
    }
  }
  return FilterVerdict::pass();
}

FilterVerdict exponent_extremes_check(const FixedPointData& d) {
  if (d.n != 3 || d.point_count() != 4)
    return FilterVerdict::skipped("applies to 6-dimensional data with 4 fixed points");
  std::vector<int> profile = n_profile(d);
  if (profile != std::vector<int>{0, 2, 2, 0})
    return FilterVerdict::skipped("profile " + profile_str(profile) + " is not (0,2,2,0)");
  if (!weight_balance_check(d).passed())
    return FilterVerdict::skipped("requires balanced weights");

  std::vector<const FixedPoint*> one_neg, two_neg;
  std::multiset<std::int64_t> all_positive;
  for (const auto& p : d.points) {
    (negative_count(p.weights) == 1 ? one_neg : two_neg).push_back(&p);
    for (std::int64_t w : p.weights)
      if (w > 0) all_positive.insert(w);
  }

  auto neg_sum = [](const FixedPoint& p) {
    std::int64_t s = 0;
    for (std::int64_t w : p.weights)
      if (w < 0) s -= w;
    return s;
  };
  // Sum of C minus the absolute weights at p, as multisets. The identity
  // comes from clearing the chi^0 sum by the product of (1-t^w) over the six
  // positive weights; that requires each point's |weight| multiset to embed
  // into C, which can fail only when a point repeats a +-w pair beyond the
  // global multiplicity of w.
  bool embeddable = true;
  auto complement_sum = [&](const FixedPoint& p) {
    std::multiset<std::int64_t> c = all_positive;
    for (std::int64_t w : p.weights) {
      auto it = c.find(std::llabs(w));
      if (it == c.end()) {
        embeddable = false;
        return std::int64_t{0};
      }
      c.erase(it);
    }
    std::int64_t s = 0;
    for (std::int64_t v : c) s += v;
    return s;
  };
  for (const auto& p : d.points) complement_sum(p);
  if (!embeddable)
    return FilterVerdict::skipped(
        "a point's |weight| multiset does not embed into the positive weight multiset");

  std::int64_t min_lhs = std::min(neg_sum(*one_neg[0]), neg_sum(*one_neg[1]));
  std::int64_t min_rhs = std::min(neg_sum(*two_neg[0]), neg_sum(*two_neg[1]));
  if (min_lhs != min_rhs) {
    std::ostringstream os;
    os << "smallest-exponent identity fails: min over one-negative points is " << min_lhs
       << ", min over two-negative points is " << min_rhs;
    return FilterVerdict::fail(os.str());
  }
  std::int64_t max_lhs = std::max(neg_sum(*one_neg[0]) + complement_sum(*one_neg[0]),
                                  neg_sum(*one_neg[1]) + complement_sum(*one_neg[1]));
  std::int64_t max_rhs = std::max(neg_sum(*two_neg[0]) + complement_sum(*two_neg[0]),
                                  neg_sum(*two_neg[1]) + complement_sum(*two_neg[1]));
  if (max_lhs != max_rhs) {
    std::ostringstream os;
    os << "biggest-exponent identity fails: max over one-negative points is " << max_lhs
       << ", max over two-negative points is " << max_rhs;
    return FilterVerdict::fail(os.str());
  }
  return FilterVerdict::pass();
}

}  // namespace fplab
