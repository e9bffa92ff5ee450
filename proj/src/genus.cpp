#include "fplab/genus.hpp"

#include <sstream>

namespace fplab {

ChiOutcome chi_vector(const FixedPointData& d) {
  ChiOutcome out;
  ChiVector chi;
  chi.values.reserve(static_cast<size_t>(d.n) + 1);
  for (int i = 0; i <= d.n; ++i) {
    RationalFunction sum;
    for (const auto& p : d.points) sum = sum + genus_term(p.weights, i);
    std::optional<Rat> c = sum.constant_value();
    if (!c) {
      out.non_constant_index = i;
      out.offending = sum;
      return out;
    }
    chi.values.push_back(*c);
  }
  out.chi = std::move(chi);
  return out;
}

FilterVerdict rigidity_check(const FixedPointData& d) {
  std::vector<int> profile = n_profile(d);
  for (int i = 0; i <= d.n; ++i) {
    if (profile[static_cast<size_t>(i)] != profile[static_cast<size_t>(d.n - i)]) {
      std::ostringstream os;
      os << "N^" << i << "=" << profile[static_cast<size_t>(i)] << " but N^" << (d.n - i)
         << "=" << profile[static_cast<size_t>(d.n - i)];
      return FilterVerdict::fail(os.str());
    }
  }
  ChiOutcome outcome = chi_vector(d);
  if (!outcome.ok()) {
    std::ostringstream os;
    os << "chi^" << outcome.non_constant_index
       << " is not constant: " << outcome.offending.str();
    return FilterVerdict::fail(os.str());
  }
  for (int i = 0; i <= d.n; ++i) {
    Rat expected(profile[static_cast<size_t>(i)]);
    if (i % 2 == 1) expected = -expected;
    if (outcome.chi->values[static_cast<size_t>(i)] != expected) {
      std::ostringstream os;
      os << "chi^" << i << "=" << rat_str(outcome.chi->values[static_cast<size_t>(i)])
         << " but (-1)^" << i << " N^" << i << "=" << rat_str(expected);
      return FilterVerdict::fail(os.str());
    }
  }
  return FilterVerdict::pass();
}

ClassicalInvariants classical_invariants(const ChiVector& chi) {
  ClassicalInvariants out;
  out.todd = chi.values.empty() ? Rat(0) : chi.values[0];
  Rat euler(0), sign(0);
  for (size_t i = 0; i < chi.values.size(); ++i) {
    sign += chi.values[i];
    euler += (i % 2 == 0) ? chi.values[i] : -chi.values[i];
  }
  out.euler = euler;
  out.signature = sign;
  return out;
}

}  // namespace fplab
