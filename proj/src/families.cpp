#include "fplab/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fplab {

namespace {

using W = std::vector<std::int64_t>;

void require_positive(const std::vector<std::int64_t>& params) {
  for (std::int64_t p : params)
    if (p <= 0) throw ParameterConstraintViolated("parameters must be positive integers");
}

std::int64_t max_abs_weight(const FixedPointData& d) {
  std::int64_t m = 0;
  for (const auto& p : d.points)
    for (std::int64_t w : p.weights) m = std::max<std::int64_t>(m, std::llabs(w));
  return m;
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> order = {
      FamilyId::Point, FamilyId::Sphere, FamilyId::TwoSpheres, FamilyId::CP2,
      FamilyId::S6,    FamilyId::T11,    FamilyId::T12_1,      FamilyId::T12_2,
      FamilyId::T12_3, FamilyId::T12_4,  FamilyId::T12_5,      FamilyId::T12_6,
  };
  return order;
}

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::Point: return "Point";
    case FamilyId::Sphere: return "Sphere";
    case FamilyId::TwoSpheres: return "TwoSpheres";
    case FamilyId::CP2: return "CP2";
    case FamilyId::S6: return "S6";
    case FamilyId::T11: return "T11";
    case FamilyId::T12_1: return "T12_1";
    case FamilyId::T12_2: return "T12_2";
    case FamilyId::T12_3: return "T12_3";
    case FamilyId::T12_4: return "T12_4";
    case FamilyId::T12_5: return "T12_5";
    case FamilyId::T12_6: return "T12_6";
  }
  return "?";
}

int family_arity(FamilyId f) {
  switch (f) {
    case FamilyId::Point: return 0;
    case FamilyId::Sphere: return 1;
    case FamilyId::TwoSpheres: return 2;
    case FamilyId::CP2: return 2;
    case FamilyId::S6: return 2;
    case FamilyId::T11: return 3;
    case FamilyId::T12_1: return 3;
    case FamilyId::T12_2: return 2;
    case FamilyId::T12_3: return 1;
    case FamilyId::T12_4: return 4;
    case FamilyId::T12_5: return 2;
    case FamilyId::T12_6: return 2;
  }
  return 0;
}

FixedPointData family_instance(FamilyId f, const std::vector<std::int64_t>& params) {
  if (static_cast<int>(params.size()) != family_arity(f))
    throw ParameterConstraintViolated("family " + family_name(f) + " takes " +
                                      std::to_string(family_arity(f)) + " parameter(s)");
  require_positive(params);
  switch (f) {
    case FamilyId::Point:
      throw ParameterConstraintViolated(
          "a single fixed point forces a 0-dimensional manifold; its data has n=0 and is "
          "not representable");
    case FamilyId::Sphere: {
      std::int64_t a = params[0];
      return make_data(1, std::vector<W>{{a}, {-a}});
    }
    case FamilyId::TwoSpheres: {
      std::int64_t a = params[0], b = params[1];
      return make_data(1, std::vector<W>{{a}, {-a}, {b}, {-b}});
    }
    case FamilyId::CP2: {
      std::int64_t a = params[0], b = params[1];
      return make_data(2, std::vector<W>{{a + b, a}, {-a, b}, {-b, -a - b}});
    }
    case FamilyId::S6: {
      std::int64_t a = params[0], b = params[1];
      return make_data(3, std::vector<W>{{-a - b, a, b}, {-a, -b, a + b}});
    }
    case FamilyId::T11: {
      std::int64_t a = params[0], b = params[1], c = params[2];
      if ((a - c) % b != 0 && (a + c) % b != 0)
        throw ParameterConstraintViolated("need a = c or a = -c mod b");
      return make_data(2, std::vector<W>{{a, b}, {-a, b}, {-b, c}, {-b, -c}});
    }
    case FamilyId::T12_1: {
      std::int64_t a = params[0], b = params[1], c = params[2];
      if (a == b || b == c || a == c)
        throw ParameterConstraintViolated("parameters must be mutually distinct");
      return make_data(3, std::vector<W>{{a, b, c},
                                         {-a, b - a, c - a},
                                         {-b, a - b, c - b},
                                         {-c, a - c, b - c}});
    }
    case FamilyId::T12_2: {
      std::int64_t a = params[0], b = params[1];
      return make_data(3, std::vector<W>{{a, a + b, a + 2 * b},
                                         {-a, b, a + 2 * b},
                                         {-a - 2 * b, -b, a},
                                         {-a - 2 * b, -a - b, -a}});
    }
    case FamilyId::T12_3: {
      std::int64_t a = params[0];
      return make_data(3, std::vector<W>{{1, 2, 3}, {-1, 1, a}, {-1, -a, 1}, {-1, -2, -3}});
    }
    case FamilyId::T12_4: {
      std::int64_t a = params[0], b = params[1], c = params[2], dd = params[3];
      return make_data(3, std::vector<W>{{-a - b, a, b},
                                         {-c - dd, c, dd},
                                         {-a, -b, a + b},
                                         {-c, -dd, c + dd}});
    }
    case FamilyId::T12_5: {
      std::int64_t a = params[0], b = params[1];
      return make_data(3, std::vector<W>{{-3 * a - b, a, b},
                                         {-2 * a - b, 3 * a + b, 3 * a + 2 * b},
                                         {-a, -a - b, 2 * a + b},
                                         {-b, -3 * a - 2 * b, a + b}});
    }
    case FamilyId::T12_6: {
      std::int64_t a = params[0], b = params[1];
      return make_data(3, std::vector<W>{{-a - b, 2 * a + b, b},
                                         {-2 * a - b, a, b},
                                         {-b, -2 * a - b, a + b},
                                         {-a, -b, 2 * a + b}});
    }
  }
  throw ParameterConstraintViolated("unknown family");
}

std::vector<FamilyMatch> match_family(const FixedPointData& d) {
  std::vector<FamilyMatch> matches;
  FixedPointData reference = sorted_representative(d);
  FixedPointData canonical = canonicalize(d);
  std::string canonical_key = serialize_data(canonical);
  std::string reference_key = serialize_data(reference);
  std::int64_t bound = max_abs_weight(canonical);
  if (bound == 0) return matches;

  for (FamilyId f : all_families()) {
    if (f == FamilyId::Point) continue;  // no representable instance
    int arity = family_arity(f);
    std::vector<std::int64_t> params(static_cast<size_t>(arity), 1);
    bool found_forward = false;
    std::vector<std::int64_t> best_params;
    Orientation best_orientation = Orientation::Forward;

    std::function<void(int)> scan = [&](int pos) {
      if (found_forward) return;
      if (pos == arity) {
        FixedPointData inst;
        try {
          inst = family_instance(f, params);
        } catch (const ParameterConstraintViolated&) {
          return;
        }
        if (inst.n != d.n || inst.point_count() != d.point_count()) return;
        if (serialize_data(canonicalize(inst)) != canonical_key) return;
        bool forward = serialize_data(sorted_representative(inst)) == reference_key;
        if (forward) {
          best_params = params;
          best_orientation = Orientation::Forward;
          found_forward = true;
        } else if (best_params.empty()) {
          best_params = params;
          best_orientation = Orientation::Reversed;
        }
        return;
      }
      for (std::int64_t v = 1; v <= bound && !found_forward; ++v) {
        params[static_cast<size_t>(pos)] = v;
        scan(pos + 1);
      }
    };
    // Every parameter occurs verbatim as a weight of its instance, so a
    // tuple matching data of maximum weight `bound` has all entries <= bound.
    if (arity > 0) scan(0);
    if (!best_params.empty()) matches.push_back({f, best_params, best_orientation});
  }
  return matches;
}

FixedPointData hirzebruch_surface(std::int64_t m, std::int64_t a, std::int64_t b) {
  if (m < 0) throw ParameterConstraintViolated("the surface index must be >= 0");
  if (a <= 0 || b <= 0) throw ParameterConstraintViolated("parameters must be positive");
  if (m * b == a)
    throw ParameterConstraintViolated("m*b = a makes a weight vanish; pick m*b != a");
  return make_data(2, std::vector<W>{{-a, b}, {m * b - a, -b}, {a, b}, {a - m * b, -b}});
}

FixedPointData quadric_data(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw ParameterConstraintViolated("parameters must be positive");
  if (a == b) throw ParameterConstraintViolated("parameters must be mutually distinct");
  return make_data(3, std::vector<W>{{-a, b - a, -b - a},
                                     {a, b + a, -b + a},
                                     {-b, a - b, -a - b},
                                     {b, a + b, -a + b}});
}

FixedPointData blowup_point_data(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw ParameterConstraintViolated("parameters must be positive");
  if (a >= b) throw ParameterConstraintViolated("need a < b");
  return make_data(3, std::vector<W>{{-2 * a - b, a, b - a},
                                     {-a - b, 2 * a + b, a + 2 * b},
                                     {a - b, -a - 2 * b, b},
                                     {-a, -b, a + b}});
}

FixedPointData blowup_sphere_data(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw ParameterConstraintViolated("parameters must be positive");
  // Blowing up the weight-b isotropy sphere of the two-fixed-point data
  // {-a-b,a,b},{-a,-b,a+b} splits each endpoint in two.
  return make_data(3, std::vector<W>{{-a - b, 2 * a + b, b},
                                     {-2 * a - b, a, b},
                                     {-a, -b, 2 * a + b},
                                     {-b, -2 * a - b, a + b}});
}

FixedPointData product_spheres_data(int copies, int n, std::int64_t w) {
  if (copies <= 0 || n <= 0 || w <= 0)
    throw ParameterConstraintViolated("parameters must be positive");
  std::vector<W> sets;
  for (int c = 0; c < copies; ++c) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      W weights;
      for (int i = 0; i < n; ++i) weights.push_back((mask >> i) & 1 ? -w : w);
      sets.push_back(std::move(weights));
    }
  }
  return make_data(n, sets);
}

FixedPointData example_data(const std::string& name, const std::vector<std::int64_t>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw ParameterConstraintViolated("example '" + name + "' takes " + std::to_string(k) +
                                        " parameter(s), got " + std::to_string(params.size()));
  };
  if (name == "s2") {
    want(1);
    return family_instance(FamilyId::Sphere, params);
  }
  if (name == "cp2") {
    want(2);
    return family_instance(FamilyId::CP2, params);
  }
  if (name == "s6") {
    want(2);
    return family_instance(FamilyId::S6, params);
  }
  if (name == "cp3") {
    want(3);
    return family_instance(FamilyId::T12_1, params);
  }
  if (name == "quadric") {
    want(2);
    return quadric_data(params[0], params[1]);
  }
  if (name == "fano") {
    want(1);
    return family_instance(FamilyId::T12_3, params);
  }
  if (name == "hirzebruch") {
    want(3);
    return hirzebruch_surface(params[0], params[1], params[2]);
  }
  if (name == "two-spheres") {
    want(2);
    return family_instance(FamilyId::TwoSpheres, params);
  }
  if (name == "blowup-point") {
    want(2);
    return blowup_point_data(params[0], params[1]);
  }
  if (name == "blowup-sphere") {
    want(2);
    return blowup_sphere_data(params[0], params[1]);
  }
  if (name == "product-spheres") {
    want(3);
    return product_spheres_data(static_cast<int>(params[0]), static_cast<int>(params[1]),
                                params[2]);
  }
  throw ParameterConstraintViolated("unknown example name '" + name + "'");
}

std::vector<std::pair<std::string, std::vector<std::int64_t>>> shipped_examples() {
  return {
      {"s2", {1}},
      {"cp2", {1, 1}},
      {"s6", {1, 1}},
      {"cp3", {1, 2, 3}},
      {"quadric", {1, 2}},
      {"fano", {1}},
      {"hirzebruch", {1, 2, 1}},
      {"two-spheres", {1, 1}},
      {"blowup-point", {1, 2}},
      {"blowup-sphere", {1, 1}},
      {"product-spheres", {1, 3, 1}},
  };
}

}  // namespace fplab
