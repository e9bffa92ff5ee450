#ifndef FPLAB_ISOTROPY_HPP
#define FPLAB_ISOTROPY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fplab/fixed_point_data.hpp"
#include "fplab/verdict.hpp"

namespace fplab {

struct DivisibilityCounts {
  int total = 0;     // m_p^w: weights at p divisible by w
  int positive = 0;  // m_p^w(+)
  int negative = 0;  // m_p^w(-)
};

/// For each w >= 2 up to the maximum absolute weight that divides at least
/// one weight: the per-point divisibility counts. Meaningful for effective
/// data (collective gcd 1).
struct IsotropyTable {
  std::map<std::int64_t, std::vector<DivisibilityCounts>> rows;
};

IsotropyTable isotropy_table(const FixedPointData& d);

/// Counting constraints on the fixed sets of the Z_w subactions, for every
/// w in the table:
///   (1) m_p^w = 1 somewhere  -> at least 2 points with m^w = 1;
///   (2) m_p^w = 3 somewhere  -> at least 2 points with m^w = 3;
///   (3) m_p^w = 2 somewhere  -> at least 3 points with m^w = 2, and the
///       values m^w(-) = 0, 1, 2 each occur among points with m^w = 2;
///   (4) m_p^w >= 4 somewhere -> at least 4 points with m^w >= 4.
/// The data is normalized to collective gcd 1 first, so the verdict is
/// scaling-invariant.
FilterVerdict isotropy_count_check(const FixedPointData& d);

/// Applies only when every weight is +-w for a single w > 0: then the point
/// count must be k * 2^n with N^i = k * C(n, i). Otherwise passes vacuously.
FilterVerdict semifree_check(const FixedPointData& d);

/// For 6-dimensional data with 4 fixed points whose profile is (1,1,1,1) or
/// (0,2,2,0): the largest absolute weight l must exceed 1 and no point may
/// have two or more weights divisible by l. Skipped when the hypotheses do
/// not apply.
FilterVerdict largest_weight_check(const FixedPointData& d);

/// For profile (0,2,2,0) data (n=3, 4 points, balanced): with p1,p2 the
/// one-negative points and p3,p4 the two-negative points, both extreme-
/// exponent identities of the cleared chi^0 sum must hold:
///   min{ |neg(p1)|, |neg(p2)| } = min{ sum|neg(p3)|, sum|neg(p4)| }
///   max over p1,p2 of |neg| + sum(C minus |weights at p|)
///     = max over p3,p4 of sum|neg| + sum(C minus |weights at p|),
/// where C is the multiset of all six positive weights. Skipped otherwise.
FilterVerdict exponent_extremes_check(const FixedPointData& d);

}  // namespace fplab

#endif
