#ifndef FPLAB_LOCALIZATION_HPP
#define FPLAB_LOCALIZATION_HPP

#include "fplab/exactalg.hpp"
#include "fplab/fixed_point_data.hpp"
#include "fplab/verdict.hpp"

namespace fplab {

/// Push-forward of the unit class: sum_p 1 / prod_i w_p^i, exact.
Rat abbv_sum(const FixedPointData& d);

/// The sum above must vanish; the nonzero value is the certificate.
FilterVerdict abbv_check(const FixedPointData& d);

}  // namespace fplab

#endif
