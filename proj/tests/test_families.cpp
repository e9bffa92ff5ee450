#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "fplab/families.hpp"
#include "fplab/search.hpp"

using namespace fplab;

namespace {

std::string key(const FixedPointData& d) { return serialize_data(canonicalize(d)); }

bool contains_match(const std::vector<FamilyMatch>& ms, FamilyId f) {
  for (const auto& m : ms)
    if (m.family == f) return true;
  return false;
}

}  // namespace

TEST_CASE("family instances print the classified multisets") {
  FixedPointData q = family_instance(FamilyId::T12_2, {1, 1});
  CHECK(key(q) == key(make_data(3, {{1, 2, 3}, {-1, 1, 3}, {-3, -1, 1}, {-3, -2, -1}})));

  FixedPointData u = family_instance(FamilyId::T12_4, {1, 1, 1, 1});
  CHECK(key(u) == key(make_data(3, {{-2, 1, 1}, {-2, 1, 1}, {-1, -1, 2}, {-1, -1, 2}})));

  CHECK_THROWS_AS(family_instance(FamilyId::T11, {1, 2, 4}), ParameterConstraintViolated);
  CHECK_THROWS_AS(family_instance(FamilyId::T12_1, {1, 1, 2}), ParameterConstraintViolated);
  CHECK_THROWS_AS(family_instance(FamilyId::Point, {}), ParameterConstraintViolated);
  CHECK_THROWS_AS(family_instance(FamilyId::Sphere, {0}), ParameterConstraintViolated);
}

TEST_CASE("matcher identifies the worked examples") {
  // the (1,2,3) projective-space data coincides with the Fano-type family
  // at a=2, so the honest matcher reports both
  std::vector<FamilyMatch> cp3 = match_family(example_data("cp3", {1, 2, 3}));
  REQUIRE(cp3.size() == 2);
  CHECK(cp3[0].family == FamilyId::T12_1);
  CHECK(cp3[0].params == std::vector<std::int64_t>{1, 2, 3});
  CHECK(cp3[0].orientation == Orientation::Forward);
  CHECK(cp3[1].family == FamilyId::T12_3);
  CHECK(cp3[1].params == std::vector<std::int64_t>{2});

  std::vector<FamilyMatch> hz = match_family(make_data(2, {{2, 1}, {-2, 1}, {-1, 1}, {-1, -1}}));
  REQUIRE(hz.size() == 1);
  CHECK(hz[0].family == FamilyId::T11);
  CHECK(hz[0].params == std::vector<std::int64_t>{2, 1, 1});
  CHECK(hz[0].orientation == Orientation::Forward);

  // congruence precondition unsatisfiable: unclassified
  CHECK(match_family(make_data(2, {{1, 2}, {-1, 2}, {-2, 4}, {-2, -4}})).empty());
}

TEST_CASE("shipped example generators") {
  FixedPointData h = example_data("hirzebruch", {1, 2, 1});
  CHECK(key(h) == key(make_data(2, {{-2, 1}, {-1, -1}, {2, 1}, {1, -1}})));

  FixedPointData qd = example_data("quadric", {1, 2});
  CHECK(key(qd) == key(make_data(3, {{-1, 1, -3}, {1, 3, -1}, {-2, -1, -3}, {2, 3, 1}})));

  FixedPointData bp = example_data("blowup-point", {1, 2});
  CHECK(key(bp) == key(make_data(3, {{-4, 1, 1}, {-3, 4, 5}, {-1, -5, 2}, {-1, -2, 3}})));

  FixedPointData bs = example_data("blowup-sphere", {1, 1});
  CHECK(key(bs) == key(make_data(3, {{-2, 3, 1}, {-3, 1, 1}, {-1, -1, 3}, {-1, -3, 2}})));

  CHECK_THROWS_AS(example_data("quadric", {1, 1}), ParameterConstraintViolated);
  CHECK_THROWS_AS(example_data("blowup-point", {2, 1}), ParameterConstraintViolated);
  CHECK_THROWS_AS(example_data("hirzebruch", {1, 1, 1}), ParameterConstraintViolated);
  CHECK_THROWS_AS(example_data("nonesuch", {}), ParameterConstraintViolated);
}

TEST_CASE("blow-up data lands in the classified families") {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t b = 1; b <= 4; ++b) {
      if (a < b) {
        std::vector<FamilyMatch> m = match_family(blowup_point_data(a, b));
        CHECK(contains_match(m, FamilyId::T12_5));
        // the printed substitution: parameters (a, b-a)
        for (const auto& fm : m)
          if (fm.family == FamilyId::T12_5)
            CHECK(key(family_instance(FamilyId::T12_5, {a, b - a})) ==
                  key(blowup_point_data(a, b)));
      }
      std::vector<FamilyMatch> ms = match_family(blowup_sphere_data(a, b));
      CHECK(contains_match(ms, FamilyId::T12_6));
    }
  }
}

TEST_CASE("hirzebruch surfaces match the dim-4 family") {
  for (std::int64_t m = 0; m <= 3; ++m)
    for (std::int64_t a = 1; a <= 4; ++a)
      for (std::int64_t b = 1; b <= 2; ++b) {
        if (m * b == a) continue;
        std::vector<FamilyMatch> ms = match_family(hirzebruch_surface(m, a, b));
        CHECK(contains_match(ms, FamilyId::T11));
      }
}

TEST_CASE("round trip over all families") {
  for (FamilyId f : all_families()) {
    if (f == FamilyId::Point) continue;
    int arity = family_arity(f);
    std::vector<std::int64_t> params(static_cast<size_t>(arity), 1);
    std::function<void(int)> sweep = [&](int pos) {
      if (pos == arity) {
        FixedPointData inst;
        try {
          inst = family_instance(f, params);
        } catch (const ParameterConstraintViolated&) {
          return;
        }
        std::vector<FamilyMatch> ms = match_family(inst);
        bool found = false;
        for (const auto& m : ms) {
          if (m.family != f) continue;
          found = true;
          CHECK(key(family_instance(f, m.params)) == key(inst));
        }
        CHECK(found);
        return;
      }
      for (std::int64_t v = 1; v <= 4; ++v) {
        params[static_cast<size_t>(pos)] = v;
        sweep(pos + 1);
      }
    };
    sweep(0);
  }
}

TEST_CASE("every family instance passes the whole pipeline") {
  SearchSpec spec;
  spec.full_eval = true;
  for (FamilyId f : all_families()) {
    if (f == FamilyId::Point) continue;
    int arity = family_arity(f);
    std::vector<std::int64_t> params(static_cast<size_t>(arity), 1);
    std::function<void(int)> sweep = [&](int pos) {
      if (pos == arity) {
        FixedPointData inst;
        try {
          inst = family_instance(f, params);
        } catch (const ParameterConstraintViolated&) {
          return;
        }
        spec.n = inst.n;
        spec.k = inst.point_count();
        FilterReport report = run_pipeline(inst, spec);
        CHECK(report.survivor);
        return;
      }
      for (std::int64_t v = 1; v <= 4; ++v) {
        params[static_cast<size_t>(pos)] = v;
        sweep(pos + 1);
      }
    };
    sweep(0);
  }
}
