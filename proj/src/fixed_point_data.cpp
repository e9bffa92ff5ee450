#include "fplab/fixed_point_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fplab {

FixedPointData make_data(int n, std::vector<FixedPoint> points) {
  if (n < 1) throw ParseError("BadDimension", "n must be >= 1, got " + std::to_string(n));
  if (points.empty()) throw ParseError("NoPoints", "at least one fixed point is required");
  std::set<std::string> seen;
  for (auto& p : points) {
    if (!seen.insert(p.label).second)
      throw ParseError("DuplicateLabel", "label '" + p.label + "' occurs twice");
    if (static_cast<int>(p.weights.size()) != n)
      throw ParseError("ArityMismatch",
                       "point '" + p.label + "' has " + std::to_string(p.weights.size()) +
                           " weights, expected " + std::to_string(n));
    for (std::int64_t w : p.weights)
      if (w == 0) throw ParseError("ZeroWeight", "point '" + p.label + "' has a zero weight");
    std::sort(p.weights.begin(), p.weights.end());
  }
  return FixedPointData{n, std::move(points)};
}

FixedPointData make_data(int n, const std::vector<std::vector<std::int64_t>>& weight_sets) {
  std::vector<FixedPoint> pts;
  pts.reserve(weight_sets.size());
  for (size_t i = 0; i < weight_sets.size(); ++i)
    pts.push_back({"p" + std::to_string(i + 1), weight_sets[i]});
  return make_data(n, std::move(pts));
}

int negative_count(const std::vector<std::int64_t>& weights) {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(),
                                        [](std::int64_t w) { return w < 0; }));
}

std::vector<int> n_profile(const FixedPointData& d) {
  std::vector<int> profile(static_cast<size_t>(d.n) + 1, 0);
  for (const auto& p : d.points) ++profile[static_cast<size_t>(negative_count(p.weights))];
  return profile;
}

FilterVerdict weight_balance_check(const FixedPointData& d) {
  std::map<std::int64_t, std::pair<long, long>> counts;  // |w| -> (+w count, -w count)
  for (const auto& p : d.points)
    for (std::int64_t w : p.weights) {
      auto& c = counts[std::llabs(w)];
      (w > 0 ? c.first : c.second) += 1;
    }
  for (const auto& [w, c] : counts) {
    if (c.first != c.second) {
      std::ostringstream os;
      os << "w=" << w << ": count +" << w << " is " << c.first << ", count -" << w
         << " is " << c.second;
      return FilterVerdict::fail(os.str());
    }
  }
  return FilterVerdict::pass();
}

FilterVerdict adjacency_check(const FixedPointData& d) {
  std::vector<int> profile = n_profile(d);
  for (size_t i = 0; i + 1 < profile.size(); ++i)
    if (profile[i] != 0 && profile[i + 1] != 0) return FilterVerdict::pass();
  std::ostringstream os;
  os << "no i with N^i and N^(i+1) both nonzero; profile (";
  for (size_t i = 0; i < profile.size(); ++i) os << (i ? "," : "") << profile[i];
  os << ")";
  return FilterVerdict::fail(os.str());
}

FixedPointData reverse_data(const FixedPointData& d) {
  FixedPointData out = d;
  for (auto& p : out.points) {
    for (auto& w : p.weights) w = -w;
    std::sort(p.weights.begin(), p.weights.end());
  }
  return out;
}

FixedPointData scale_data(const FixedPointData& d, std::int64_t c) {
  if (c <= 0) throw std::invalid_argument("scale factor must be positive");
  FixedPointData out = d;
  for (auto& p : out.points)
    for (auto& w : p.weights) w *= c;
  return out;
}

std::int64_t collective_gcd(const FixedPointData& d) {
  std::int64_t g = 0;
  for (const auto& p : d.points)
    for (std::int64_t w : p.weights) g = std::gcd(g, std::llabs(w));
  return g;
}

FixedPointData sorted_representative(const FixedPointData& d) {
  FixedPointData out = d;
  std::int64_t g = collective_gcd(out);
  if (g > 1)
    for (auto& p : out.points)
      for (auto& w : p.weights) w /= g;
  for (auto& p : out.points) std::sort(p.weights.begin(), p.weights.end());
  std::sort(out.points.begin(), out.points.end(),
            [](const FixedPoint& a, const FixedPoint& b) {
              int na = negative_count(a.weights), nb = negative_count(b.weights);
              if (na != nb) return na < nb;
              return a.weights < b.weights;
            });
  for (size_t i = 0; i < out.points.size(); ++i) out.points[i].label = "p" + std::to_string(i + 1);
  return out;
}

FixedPointData canonicalize(const FixedPointData& d) {
  FixedPointData forward = sorted_representative(d);
  FixedPointData backward = sorted_representative(reverse_data(d));
  return serialize_data(forward) <= serialize_data(backward) ? forward : backward;
}

std::string serialize_data(const FixedPointData& d) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : d.points) {
    nlohmann::ordered_json jp;
    jp["label"] = p.label;
    std::vector<std::int64_t> ws = p.weights;
    std::sort(ws.begin(), ws.end());
    jp["weights"] = ws;
    j["points"].push_back(std::move(jp));
  }
  return j.dump();
}

FixedPointData parse_data(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("BadDocument", e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("points"))
    throw ParseError("BadDocument", "expected an object with keys 'n' and 'points'");
  if (!j["n"].is_number_integer())
    throw ParseError("BadDimension", "'n' must be an integer");
  int n = j["n"].get<int>();
  if (!j["points"].is_array())
    throw ParseError("BadDocument", "'points' must be an array");
  std::vector<FixedPoint> pts;
  for (const auto& jp : j["points"]) {
    if (!jp.is_object() || !jp.contains("label") || !jp.contains("weights"))
      throw ParseError("BadDocument", "each point needs 'label' and 'weights'");
    if (!jp["label"].is_string())
      throw ParseError("BadLabel", "point labels must be strings");
    FixedPoint p;
    p.label = jp["label"].get<std::string>();
    if (!jp["weights"].is_array())
      throw ParseError("BadWeight", "'weights' must be an array at point '" + p.label + "'");
    for (const auto& jw : jp["weights"]) {
      if (!jw.is_number_integer())
        throw ParseError("BadWeight", "weights must be integers at point '" + p.label + "'");
      p.weights.push_back(jw.get<std::int64_t>());
    }
    pts.push_back(std::move(p));
  }
  return make_data(n, std::move(pts));
}

}  // namespace fplab
