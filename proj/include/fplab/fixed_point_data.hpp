#ifndef FPLAB_FIXED_POINT_DATA_HPP
#define FPLAB_FIXED_POINT_DATA_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fplab/verdict.hpp"

namespace fplab {

struct ParseError : std::runtime_error {
  ParseError(std::string code_, const std::string& message)
      : std::runtime_error(code_ + ": " + message), code(std::move(code_)) {}
  std::string code;
};

/// One fixed point: a label and the multiset of nonzero signed weights of
/// the isotropy representation there, kept sorted ascending.
struct FixedPoint {
  std::string label;
  std::vector<std::int64_t> weights;
};

/// The complete combinatorial input: half-dimension n plus one weight
/// multiset of size n per fixed point. Labels are distinct; there is at
/// least one point; n >= 1.
struct FixedPointData {
  int n = 0;
  std::vector<FixedPoint> points;

  int point_count() const { return static_cast<int>(points.size()); }
};

/// Validating constructor; sorts each weight multiset. Throws ParseError
/// (codes: BadDimension, NoPoints, DuplicateLabel, ZeroWeight,
/// ArityMismatch) on invariant violations.
FixedPointData make_data(int n, std::vector<FixedPoint> points);

/// Shorthand used all over the tests: points labelled p1..pk.
FixedPointData make_data(int n, const std::vector<std::vector<std::int64_t>>& weight_sets);

int negative_count(const std::vector<std::int64_t>& weights);

/// N^i = number of fixed points with exactly i negative weights, i=0..n.
std::vector<int> n_profile(const FixedPointData& d);

/// For every w>0 the multiplicity of +w over all points must equal the
/// multiplicity of -w.
FilterVerdict weight_balance_check(const FixedPointData& d);

/// Some consecutive pair N^i, N^{i+1} must both be nonzero.
FilterVerdict adjacency_check(const FixedPointData& d);

/// Negate every weight (the reversed circle action); labels are kept.
FixedPointData reverse_data(const FixedPointData& d);

/// Multiply every weight by c > 0.
FixedPointData scale_data(const FixedPointData& d, std::int64_t c);

/// gcd of the absolute values of all weights.
std::int64_t collective_gcd(const FixedPointData& d);

/// Divide all weights by the collective gcd, sort points by (n_p, weights),
/// relabel p1..pk. This is the per-orientation representative used by
/// canonicalize; it does not quotient by reversal.
FixedPointData sorted_representative(const FixedPointData& d);

/// Canonical form under scaling x relabelling x reversal: the smaller of
/// the two sorted representatives by serialized byte order.
FixedPointData canonicalize(const FixedPointData& d);

/// Canonical compact JSON:
/// {"n":..,"points":[{"label":..,"weights":[..]},..]}
std::string serialize_data(const FixedPointData& d);

/// Inverse of serialize_data, with descriptive errors (ParseError codes
/// additionally: BadDocument, BadLabel, BadWeight).
FixedPointData parse_data(const std::string& text);

}  // namespace fplab

#endif
