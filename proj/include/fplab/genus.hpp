#ifndef FPLAB_GENUS_HPP
#define FPLAB_GENUS_HPP

#include <optional>
#include <vector>

#include "fplab/exactalg.hpp"
#include "fplab/fixed_point_data.hpp"
#include "fplab/verdict.hpp"

namespace fplab {

/// chi^0..chi^n of the chi_y-genus, chi_y = sum chi^i y^i.
struct ChiVector {
  std::vector<Rat> values;
};

/// Result of evaluating the localization sum for every i. When some chi^i
/// fails to collapse to a constant, the reduced offending sum is kept as
/// the certificate: such data cannot come from any circle action of this
/// kind.
struct ChiOutcome {
  std::optional<ChiVector> chi;
  int non_constant_index = -1;
  RationalFunction offending;

  bool ok() const { return chi.has_value(); }
};

/// Evaluates chi^i = sum_p sigma_i(t^{w_p^1},..,t^{w_p^n}) / prod_j (1-t^{w_p^j})
/// exactly, summing per-point terms pairwise in point order.
ChiOutcome chi_vector(const FixedPointData& d);

/// Rigidity filter: chi_vector must collapse, chi^i must equal (-1)^i N^i,
/// and the profile must satisfy N^i = N^{n-i}.
FilterVerdict rigidity_check(const FixedPointData& d);

struct ClassicalInvariants {
  Rat todd;       // chi^0
  Rat euler;      // chi_y at y = -1
  Rat signature;  // chi_y at y = +1
};

ClassicalInvariants classical_invariants(const ChiVector& chi);

}  // namespace fplab

#endif
