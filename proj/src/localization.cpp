#include "fplab/localization.hpp"

namespace fplab {

Rat abbv_sum(const FixedPointData& d) {
  Rat sum(0);
  for (const auto& p : d.points) {
    Int prod(1);
    for (std::int64_t w : p.weights) prod *= Int(static_cast<long>(w));
    Rat term(1);
    term /= Rat(prod);
    sum += term;
    sum.canonicalize();
  }
  return sum;
}

FilterVerdict abbv_check(const FixedPointData& d) {
  Rat s = abbv_sum(d);
  if (s == 0) return FilterVerdict::pass();
  return FilterVerdict::fail("sum 1/prod(w_p) = " + rat_str(s) + ", expected 0");
}

}  // namespace fplab
