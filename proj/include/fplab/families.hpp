#ifndef FPLAB_FAMILIES_HPP
#define FPLAB_FAMILIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fplab/fixed_point_data.hpp"

namespace fplab {

struct ParameterConstraintViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The classified families:
///   Point       - single fixed point (dimension 0; not representable here)
///   Sphere      - rotation of the 2-sphere, weights {a},{-a}
///   TwoSpheres  - disjoint rotations of two 2-spheres
///   CP2         - the 3-fixed-point surface family {a+b,a},{-a,b},{-b,-a-b}
///   S6          - the 2-fixed-point 6-dimensional family
///   T11         - dim 4, 4 points: {a,b},{-a,b},{-b,c},{-b,-c}, a=+-c mod b
///   T12_1..T12_6- dim 6, 4 points: projective-space type, quadric type,
///                 Fano type, two-six-spheres type, and the two blow-up
///                 shaped types
enum class FamilyId {
  Point,
  Sphere,
  TwoSpheres,
  CP2,
  S6,
  T11,
  T12_1,
  T12_2,
  T12_3,
  T12_4,
  T12_5,
  T12_6,
};

const std::vector<FamilyId>& all_families();
std::string family_name(FamilyId f);
int family_arity(FamilyId f);

/// Instantiates the family's multisets verbatim. Throws
/// ParameterConstraintViolated on nonpositive parameters, on T11's failed
/// congruence, on T12_1's repeated parameters, and for Point (its data has
/// n = 0, below the representable range).
FixedPointData family_instance(FamilyId f, const std::vector<std::int64_t>& params);

enum class Orientation { Forward, Reversed };

struct FamilyMatch {
  FamilyId family;
  std::vector<std::int64_t> params;
  Orientation orientation;
};

/// All families whose instance, possibly reversed, canonicalizes to
/// canonicalize(d): one entry per family with the smallest matching
/// parameter tuple, forward matches preferred. Empty means unclassified.
std::vector<FamilyMatch> match_family(const FixedPointData& d);

/// Named generators for the worked examples. Parameter conventions:
///   s2(a); cp2(a,b); s6(a,b); cp3(a,b,c) distinct; quadric(a,b) distinct;
///   fano(a); hirzebruch(m,a,b) with m*b != a; two-spheres(a,b);
///   blowup-point(a,b) with a < b; blowup-sphere(a,b);
///   product-spheres(k,n,w).
FixedPointData example_data(const std::string& name, const std::vector<std::int64_t>& params);

/// Example names with their default parameters, in CLI listing order.
std::vector<std::pair<std::string, std::vector<std::int64_t>>> shipped_examples();

FixedPointData hirzebruch_surface(std::int64_t m, std::int64_t a, std::int64_t b);
FixedPointData quadric_data(std::int64_t a, std::int64_t b);
FixedPointData blowup_point_data(std::int64_t a, std::int64_t b);
FixedPointData blowup_sphere_data(std::int64_t a, std::int64_t b);
FixedPointData product_spheres_data(int copies, int n, std::int64_t w);

}  // namespace fplab

#endif
